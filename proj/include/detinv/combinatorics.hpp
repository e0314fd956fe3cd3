#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace detinv {

/// Integer partition. Stored without trailing zeros, so (2,1,0) == (2,1).
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// i-th part (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Number of nonzero parts.
  int length() const { return int(parts_.size()); }
  /// |λ|
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// "(3,1)", "()" for the empty partition.
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A dominant weight of GL_rank: a weakly decreasing integer vector of
/// length rank. Trailing zeros are significant.
class DominantWeight {
 public:
  /// Throws std::invalid_argument when empty or not weakly decreasing.
  explicit DominantWeight(std::vector<long> entries);
  static DominantWeight from_partition(const Partition& p, int rank);

  const std::vector<long>& entries() const { return entries_; }
  int rank() const { return int(entries_.size()); }

  auto operator<=>(const DominantWeight&) const = default;

 private:
  std::vector<long> entries_;
};

/// All partitions of d with at most max_len parts, in reverse
/// lexicographic order: (4), (3,1), (2,2), (2,1,1), ...
std::vector<Partition> partitions_of(int d, int max_len);

/// Conjugate partition: i-th part counts the parts of p that are >= i.
Partition transpose(const Partition& p);

/// Number of semistandard Young tableaux of the given shape with entries in
/// {1..n}; zero when the shape has more than n rows.
mpz_class ssyt_count(const Partition& shape, int n);

/// Dimension of the dual Weyl module of GL_rank with highest weight w.
mpz_class weyl_dim(const DominantWeight& w);

/// sum over partitions λ of d with at most min(m,n) parts of
/// ssyt_count(λ, m) * ssyt_count(λ, n).
mpz_class cauchy_dim(int m, int n, int d);

/// Binomial coefficient, zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

}  // namespace detinv
