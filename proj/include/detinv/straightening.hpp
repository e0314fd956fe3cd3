#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "detinv/field.hpp"
#include "detinv/gamma.hpp"
#include "detinv/minor_lattice.hpp"
#include "detinv/polynomial.hpp"

namespace detinv {

using QPoly = SparsePoly<RationalField>;

/// Variable index of the matrix entry x_{ij} (1-based i, j): (i-1)*n + (j-1).
inline std::size_t entry_variable(int i, int j, int n) { return std::size_t(i - 1) * std::size_t(n) + std::size_t(j - 1); }

/// Leibniz expansion of the minor in the entries of a generic m x n matrix,
/// permuting columns with rows kept in their given order.
QPoly minor_polynomial(const Minor& a, int m, int n);

struct StraighteningTerm {
  mpq_class coefficient;
  StandardMonomial monomial;
};

/// A product of minors written in the standard monomial basis.
struct StraighteningResult {
  std::vector<Minor> input;              // chain-sorted
  std::vector<StraighteningTerm> terms;  // sorted by monomial, nonzero coefficients

  /// "+1 [1|1][2|2] -1 [12|12]"; "0" when there are no terms.
  std::string to_string() const;
};

/// Straightening against a fixed m x n lattice. Minor expansions are built
/// once at construction; all queries are const.
class Straightener {
 public:
  Straightener(int m, int n);

  int m() const { return poset_.m(); }
  int n() const { return poset_.n(); }
  const MinorPoset& poset() const { return poset_; }

  QPoly expand(std::span<const Minor> factors) const;
  QPoly expand(const StandardMonomial& v) const { return expand(v.factors()); }
  QPoly expand(const StraighteningResult& r) const;

  /// Standard monomials using row i exactly row_content[i-1] times and
  /// column j exactly col_content[j-1] times.
  std::vector<StandardMonomial> standard_monomials_with_content(const std::vector<int>& row_content,
                                                                const std::vector<int>& col_content) const;

  /// Writes the product of the factors as a combination of standard
  /// monomials by solving an exact linear system. The system is restricted
  /// to standard monomials with the product's row and column content, which
  /// is a direct summand of the degree slice, so the answer is the unique
  /// one over the whole slice. Throws std::logic_error if the standard
  /// monomials fail to span the product.
  StraighteningResult straighten(std::vector<Minor> factors) const;

 private:
  QPoly empty_product() const;

  MinorPoset poset_;
  std::vector<QPoly> minor_polys_;
};

StraighteningResult straighten(const std::vector<Minor>& factors, int m, int n);

struct BasisReport {
  int m = 0, n = 0, d = 0;
  std::size_t count = 0;  // standard monomials of degree d
  std::size_t rank = 0;   // rank of their expansions
  mpz_class expected;     // dimension of the degree-d slice of the polynomial ring
  bool passed = false;
};

/// Checks that the degree-d standard monomials are linearly independent and
/// as many as the monomials of degree d in mn variables. Independence is
/// checked one row/column content block at a time.
BasisReport verify_basis(int m, int n, int d);

/// Rank of all degree-d standard monomial expansions in one dense matrix
/// over the full monomial slice. Independent cross-check of verify_basis
/// for small inputs.
std::size_t dense_basis_rank(int m, int n, int d);

struct PairViolation {
  Minor xi;
  Minor eta;
  std::string reason;
};

struct SubaslReport {
  BlockSpec spec;
  int n = 0;
  std::size_t generators = 0;
  std::size_t incomparable_pairs = 0;
  std::vector<PairViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// For every incomparable pair in Γ, straightens the product and checks
/// that each resulting monomial has all factors in Γ and contains a factor
/// below both inputs.
SubaslReport verify_subasl_condition(const BlockSpec& b, int n);
SubaslReport verify_subasl_condition(const BlockSpec& b, const Straightener& s);

struct WeightReport {
  int m = 0, n = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;  // comparable pairs, already standard
  std::size_t monomials_checked = 0;
  std::vector<PairViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// For every incomparable pair of minors with total degree at most
/// degree_bound, checks that each monomial of its straightening has weight
/// strictly above the weight of the pair.
WeightReport verify_weight_increase(int m, int n, int degree_bound);
WeightReport verify_weight_increase(const Straightener& s, int degree_bound);

}  // namespace detinv
