#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "detinv/field.hpp"
#include "detinv/matrix.hpp"
#include "detinv/monomial_index.hpp"
#include "detinv/polynomial.hpp"

namespace detinv {

using FpPoly = SparsePoly<PrimeField>;

/// Size limits for the probes. Exceeding one raises ResourceError instead
/// of returning a verdict.
struct ResourceCaps {
  std::size_t max_vars = 9;
  std::uint32_t max_prime = 3;
  std::uint64_t max_q = 9;
  long max_degree = 64;        // largest slice degree searched
  std::size_t max_dim = 20000; // largest monomial slice or generator-row count
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A homogeneous ideal of F_p[x_1..x_v] with positive variable weights
/// (all ones unless given).
class HomogeneousIdeal {
 public:
  /// Zero generators are dropped. Throws std::invalid_argument when a
  /// generator is not homogeneous for the weights or lives in another ring.
  HomogeneousIdeal(PrimeField field, std::size_t nvars, std::vector<FpPoly> generators, std::vector<int> weights = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return nvars_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<FpPoly>& generators() const { return generators_; }
  long generator_degree(std::size_t j) const { return generators_[j].degree(weights_); }

  /// Set when the generators are a presentation truncated at this degree;
  /// verdicts are then conditional on it.
  std::optional<int> truncation_degree() const { return truncation_degree_; }
  void set_truncation_degree(int d) { truncation_degree_ = d; }

  FpPoly zero() const { return FpPoly(field_, nvars_); }
  FpPoly one() const { return FpPoly::constant(field_, nvars_, 1); }

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<FpPoly> generators_;
  std::vector<int> weights_;
  std::optional<int> truncation_degree_;
};

/// The ideal generated by the q-th powers of the generators. Throws
/// std::invalid_argument unless q = p^e with e >= 1.
HomogeneousIdeal frobenius_power(const HomogeneousIdeal& ideal, std::uint64_t q);

/// The degree-d graded piece of an ideal as an exact row space over the
/// monomials of degree d.
class IdealSlice {
 public:
  IdealSlice(const HomogeneousIdeal& ideal, long d, const ResourceCaps& caps = {});

  long degree() const { return index_.degree(); }
  const MonomialIndex& index() const { return index_; }
  std::size_t dimension() const { return span_.dimension(); }
  const RowSpan<PrimeField>& span() const { return span_; }

  /// Membership of a polynomial that is homogeneous of this degree (or zero).
  bool contains(const FpPoly& p) const;

 private:
  MonomialIndex index_;
  RowSpan<PrimeField> span_;
};

IdealSlice ideal_slice(const HomogeneousIdeal& ideal, long d, const ResourceCaps& caps = {});

/// Membership of an arbitrary polynomial, component by component.
bool ideal_contains(const HomogeneousIdeal& ideal, const FpPoly& p, const ResourceCaps& caps = {});

enum class Verdict { Split, NotDetected, FPure, NotFPure };

std::string to_string(Verdict v);

struct FrobeniusProbeResult {
  Verdict verdict = Verdict::NotDetected;
  std::optional<FpPoly> witness;   // f = c*h with h in (I^[q] : I) and f outside m^[q]
  std::optional<FpPoly> cofactor;  // h
  long degree_bound = 0;           // largest witness degree that was searched
  std::uint64_t q = 0;
  std::optional<int> truncation_degree;
  std::string note;

  bool positive() const { return verdict == Verdict::Split || verdict == Verdict::FPure; }
};

/// F-purity of R = S/I by the colon criterion: R is F-pure iff some f in
/// (I^[p] : I) has a monomial with every exponent at most p - 1. Every
/// degree a witness can have is searched, so NotFPure is definitive (up
/// to the ideal's truncation degree, when set).
FrobeniusProbeResult fedder_fpure(const HomogeneousIdeal& ideal, const ResourceCaps& caps = {});

/// Detects a splitting of x -> c x^q (q = p^r) through a witness in
/// c (I^[q] : I) outside m^[q]. NotDetected is specific to this (c, r).
/// c must be homogeneous and nonzero.
FrobeniusProbeResult splitting_probe(const HomogeneousIdeal& ideal, const FpPoly& c, int r, const ResourceCaps& caps = {});

/// Re-checks a positive verdict without reusing the search: f == c*h, h*g
/// lies in I^[q] for every generator g (by fresh slice membership), and f
/// has a monomial with all exponents below q.
bool verify_splitting_witness(const HomogeneousIdeal& ideal, const FpPoly& c, const FrobeniusProbeResult& result,
                              const ResourceCaps& caps = {});

/// True when some term of f has every exponent <= q - 1, i.e. f is not in m^[q].
bool has_low_monomial(const FpPoly& f, std::uint64_t q);

struct TightClosureStep {
  int r;
  std::uint64_t q;
  bool contained;  // c x^q in I^[q]
};

/// Evidence toward x lying in the tight closure of I: for r = 1..r_max,
/// whether c x^{p^r} lies in I^[p^r]. Never a proof.
std::vector<TightClosureStep> tight_closure_probe(const HomogeneousIdeal& ideal, const FpPoly& x, const FpPoly& c, int r_max,
                                                  const ResourceCaps& caps = {});

/// Relations among generators of a subring, degree by degree.
template <class Field>
struct Presentation {
  std::vector<int> weights;  // degree of each presentation variable y_k
  int degree_bound = 0;
  std::vector<SparsePoly<Field>> relations;
};

/// Kernel of F[y_1..y_k] -> F[x], y_k -> generators[k], with deg y_k =
/// degrees[k], computed in each degree 1..degree_bound as the left null
/// space of the evaluation matrix. Returns a basis of each graded piece,
/// not a minimal generating set.
template <class Field>
Presentation<Field> presentation_kernel(const std::vector<SparsePoly<Field>>& generators, const std::vector<int>& degrees,
                                        int degree_bound, const ResourceCaps& caps = {}) {
  if (generators.empty()) throw std::invalid_argument("presentation needs at least one generator");
  if (generators.size() != degrees.size()) throw std::invalid_argument("need one degree per generator");
  const Field& field = generators.front().ring();
  const std::size_t ambient = generators.front().nvars();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].nvars() != ambient) throw std::invalid_argument("generators live in different rings");
    if (degrees[k] <= 0) throw std::invalid_argument("generator degrees must be positive");
    if (!generators[k].is_homogeneous()) throw std::invalid_argument("generator " + std::to_string(k + 1) + " is not homogeneous");
    if (!generators[k].is_zero() && generators[k].degree() != degrees[k])
      throw std::invalid_argument("generator " + std::to_string(k + 1) + " does not have its assigned degree");
  }
  if (degree_bound > caps.max_degree) throw ResourceError("presentation degree bound exceeds the degree cap");

  Presentation<Field> out{degrees, degree_bound, {}};
  const std::size_t k = generators.size();
  for (int e = 1; e <= degree_bound; ++e) {
    MonomialIndex ymono(k, e, degrees);
    if (ymono.size() > caps.max_dim) throw ResourceError("presentation slice exceeds the dimension cap");
    if (ymono.size() == 0) continue;
    std::vector<SparsePoly<Field>> images;
    std::map<Exponent, std::size_t> columns;
    for (const auto& ye : ymono.monomials()) {
      auto img = SparsePoly<Field>::constant(field, ambient, field.one());
      for (std::size_t v = 0; v < k; ++v)
        if (ye[v]) img = img * generators[v].pow(std::uint64_t(ye[v]));
      for (const auto& [xe, c] : img.terms()) columns.try_emplace(xe, columns.size());
      images.push_back(std::move(img));
    }
    Matrix<Field> eval(field, images.size(), columns.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      for (const auto& [xe, c] : images[i].terms()) eval(i, columns.at(xe)) = c;
    for (const auto& v : left_nullspace(eval)) out.relations.push_back(ymono.to_poly(field, v));
  }
  return out;
}

}  // namespace detinv
