#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detinv/combinatorics.hpp"

namespace detinv {

/// The minor [c_1..c_u | d_1..d_u] of a generic m x n matrix. Indices are
/// 1-based and strictly increasing; u is both the size and the degree.
struct Minor {
  std::vector<int> rows;
  std::vector<int> cols;

  Minor() = default;
  /// Throws std::invalid_argument unless rows and cols are nonempty, of equal
  /// length, positive and strictly increasing.
  Minor(std::vector<int> r, std::vector<int> c);

  int size() const { return int(rows.size()); }
  /// True when all indices fit an m x n matrix.
  bool fits(int m, int n) const;

  /// "[12|12]"; indices above 9 switch to comma separated form "[1,12|3,10]".
  std::string to_string() const;
  /// Accepts "[12|13]" (one digit per index) or "[1,2|1,3]".
  static Minor parse(std::string_view text);

  /// Display order: by size, then rows, then columns. Not the lattice order.
  std::strong_ordering operator<=>(const Minor& o) const;
  bool operator==(const Minor& o) const = default;
};

/// Parses a comma separated list of minors such as "[2|1],[1|2]".
std::vector<Minor> parse_minor_list(std::string_view text);

/// Lattice order: a <= b iff size(a) >= size(b) and b's row and column
/// indices dominate a's on the first size(b) positions.
bool leq(const Minor& a, const Minor& b);
/// Greatest lower bound: size max(|a|,|b|), componentwise minima on the
/// overlap, the longer argument's tail after it.
Minor meet(const Minor& a, const Minor& b);
/// Least upper bound: size min(|a|,|b|), componentwise maxima.
Minor join(const Minor& a, const Minor& b);

/// The lattice of all minors of a generic m x n matrix.
///
/// Elements are stored in a linear extension of the lattice order (larger
/// minors first, then lexicographic), so i < j whenever element i is
/// strictly below element j. The order relation and coheights are
/// precomputed; the object is immutable after construction.
class MinorPoset {
 public:
  MinorPoset(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  std::span<const Minor> elements() const { return elements_; }
  const Minor& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Minor& a) const;
  /// index_of that throws std::invalid_argument for foreign minors.
  std::size_t require_index(const Minor& a) const;
  bool contains(const Minor& a) const { return index_of(a).has_value(); }

  bool leq(std::size_t i, std::size_t j) const { return order_[i * size() + j]; }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
  /// Indices j with i <= j, ascending (i itself first).
  std::span<const std::size_t> upper_set(std::size_t i) const { return uppers_[i]; }

  /// Length of the longest strictly increasing chain starting at the element.
  int coheight(std::size_t i) const { return coheight_[i]; }
  int coheight(const Minor& a) const { return coheight_[require_index(a)]; }

 private:
  int m_;
  int n_;
  std::vector<Minor> elements_;
  std::map<Minor, std::size_t> index_;
  std::vector<bool> order_;
  std::vector<std::vector<std::size_t>> uppers_;
  std::vector<int> coheight_;
};

/// w(m) = sum over factors of 3^coheight. Additive over products.
mpz_class monomial_weight(const MinorPoset& p, std::span<const Minor> factors);

/// A product of minors forming a weakly increasing chain in the lattice
/// order (so factor sizes weakly decrease).
class StandardMonomial {
 public:
  StandardMonomial() = default;
  /// Takes factors in any order, sorts them into the chain order and throws
  /// std::invalid_argument if they do not form a multichain.
  explicit StandardMonomial(std::vector<Minor> factors);

  const std::vector<Minor>& factors() const { return factors_; }
  int degree() const;
  bool empty() const { return factors_.empty(); }

  /// "[1|1][2|2]", "1" for the empty monomial.
  std::string to_string() const;

  auto operator<=>(const StandardMonomial&) const = default;

 private:
  std::vector<Minor> factors_;
};

/// Sorts minors into the canonical chain candidate order (sizes descending,
/// then lexicographic). A multiset is standard iff the result is a chain.
void sort_chain_order(std::vector<Minor>& factors);
bool is_multichain(std::span<const Minor> sorted_factors);

/// Visits every multichain of total degree d, as element indices ascending
/// in the stored linear extension. `allowed`, when given, restricts the
/// elements that may appear. Enumeration is depth first and deterministic.
void for_each_standard_monomial(const MinorPoset& p, int d,
                                const std::function<void(std::span<const std::size_t>)>& visit,
                                const std::function<bool(std::size_t)>& allowed = {});

/// Counts multichains of total degree d without listing them.
mpz_class count_standard_monomials(const MinorPoset& p, int d, const std::function<bool(std::size_t)>& allowed = {});

std::vector<StandardMonomial> standard_monomials(int m, int n, int d);

/// Transpose of the sequence of factor sizes.
Partition shape_of(const StandardMonomial& v);

/// Number of degree-d standard monomials of each shape.
std::map<Partition, mpz_class> count_by_shape(int m, int n, int d);

}  // namespace detinv
