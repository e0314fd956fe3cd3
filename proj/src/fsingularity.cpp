#include "detinv/fsingularity.hpp"

#include <algorithm>

namespace detinv {
namespace {

void check_ring(const PrimeField& field, std::size_t nvars, const FpPoly& p, const char* what) {
  if (p.nvars() != nvars) throw std::invalid_argument(std::string(what) + " has the wrong number of variables");
  if (!(p.ring() == field)) throw std::invalid_argument(std::string(what) + " is over a different field");
}

void check_common_caps(const HomogeneousIdeal& ideal, const ResourceCaps& caps) {
  if (ideal.nvars() > caps.max_vars)
    throw ResourceError("variable count " + std::to_string(ideal.nvars()) + " exceeds the cap of " + std::to_string(caps.max_vars));
  if (ideal.characteristic() > caps.max_prime)
    throw ResourceError("characteristic " + std::to_string(ideal.characteristic()) + " exceeds the cap of " +
                        std::to_string(caps.max_prime));
}

std::uint64_t checked_power(std::uint32_t p, int r, const ResourceCaps& caps) {
  if (r < 1) throw std::invalid_argument("Frobenius exponent r must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > caps.max_q) throw ResourceError("q = p^r exceeds the cap of " + std::to_string(caps.max_q));
  }
  return q;
}

// Dense vector of mono * g in the monomial slice `index`.
std::vector<PrimeField::Element> shifted_vector(const MonomialIndex& index, const Exponent& mono, const FpPoly& g) {
  std::vector<PrimeField::Element> v(index.size(), 0);
  Exponent e(mono.size());
  for (const auto& [ge, c] : g.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ge[i] + mono[i];
    v[*index.find(e)] = c;
  }
  return v;
}

MonomialIndex capped_index(std::size_t nvars, long d, const std::vector<int>& weights, const ResourceCaps& caps) {
  if (d > caps.max_degree) throw ResourceError("slice degree " + std::to_string(d) + " exceeds the cap of " + std::to_string(caps.max_degree));
  const std::size_t count = count_monomials(nvars, d, weights);
  if (count > caps.max_dim)
    throw ResourceError("degree-" + std::to_string(d) + " slice has " + std::to_string(count) + " monomials, above the cap of " +
                        std::to_string(caps.max_dim));
  return MonomialIndex(nvars, d, weights);
}

// Searches c * (I^[q] : I) for an element outside m^[q], one degree at a time.
FrobeniusProbeResult search_witness(const HomogeneousIdeal& ideal, const FpPoly& c, std::uint64_t q, const ResourceCaps& caps) {
  const PrimeField& F = ideal.field();
  const auto& w = ideal.weights();
  const HomogeneousIdeal frob = frobenius_power(ideal, q);

  long bound = 0;  // largest weighted degree of a monomial with exponents < q
  for (int wi : w) bound += long(wi) * long(q - 1);
  if (bound > caps.max_degree) throw ResourceError("witness search degree " + std::to_string(bound) + " exceeds the cap");
  const long c_degree = c.degree(w);

  FrobeniusProbeResult result;
  result.q = q;
  result.degree_bound = bound;
  result.truncation_degree = ideal.truncation_degree();

  std::map<long, IdealSlice> frob_slices;
  auto frob_slice = [&](long d) -> const IdealSlice& {
    auto it = frob_slices.find(d);
    if (it == frob_slices.end()) it = frob_slices.emplace(d, IdealSlice(frob, d, caps)).first;
    return it->second;
  };

  for (long e = 0; e + c_degree <= bound; ++e) {
    const MonomialIndex cofactors = capped_index(ideal.nvars(), e, w, caps);
    if (cofactors.size() == 0) continue;

    std::vector<std::vector<PrimeField::Element>> colon_basis;
    if (ideal.generators().empty()) {
      for (std::size_t i = 0; i < cofactors.size(); ++i) {
        std::vector<PrimeField::Element> unit(cofactors.size(), 0);
        unit[i] = 1;
        colon_basis.push_back(std::move(unit));
      }
    } else {
      // Row i: residues of (monomial_i * g_j) modulo I^[q], all j side by side.
      std::vector<std::vector<PrimeField::Element>> rows(cofactors.size());
      for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
        const IdealSlice& target = frob_slice(e + ideal.generator_degree(j));
        for (std::size_t i = 0; i < cofactors.size(); ++i) {
          auto residue = target.span().reduce(shifted_vector(target.index(), cofactors[i], ideal.generators()[j]));
          rows[i].insert(rows[i].end(), residue.begin(), residue.end());
        }
      }
      Matrix<PrimeField> residues(F, 0, rows.front().size());
      for (const auto& r : rows) residues.append_row(r);
      colon_basis = left_nullspace(residues);
    }

    for (const auto& h_vec : colon_basis) {
      FpPoly h = cofactors.to_poly(F, h_vec);
      FpPoly f = c * h;
      if (has_low_monomial(f, q)) {
        result.witness = std::move(f);
        result.cofactor = std::move(h);
        return result;
      }
    }
  }
  return result;
}

}  // namespace

HomogeneousIdeal::HomogeneousIdeal(PrimeField field, std::size_t nvars, std::vector<FpPoly> generators, std::vector<int> weights)
    : field_(field), nvars_(nvars), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(nvars_, 1);
  if (weights_.size() != nvars_) throw std::invalid_argument("need one weight per variable");
  for (int wi : weights_)
    if (wi <= 0) throw std::invalid_argument("variable weights must be positive");
  for (std::size_t j = 0; j < generators.size(); ++j) {
    check_ring(field_, nvars_, generators[j], "generator");
    if (generators[j].is_zero()) continue;
    if (!generators[j].is_homogeneous(weights_))
      throw std::invalid_argument("generator " + std::to_string(j + 1) + " (" + generators[j].to_string() + ") is not homogeneous");
    generators_.push_back(std::move(generators[j]));
  }
}

HomogeneousIdeal frobenius_power(const HomogeneousIdeal& ideal, std::uint64_t q) {
  const std::uint32_t p = ideal.characteristic();
  std::uint64_t t = q;
  if (t < p) throw std::invalid_argument("q must be a positive power of the characteristic");
  while (t % p == 0) t /= p;
  if (t != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a power of " + std::to_string(p));
  std::vector<FpPoly> powers;
  for (const auto& g : ideal.generators()) powers.push_back(g.pow(q));
  HomogeneousIdeal out(ideal.field(), ideal.nvars(), std::move(powers), ideal.weights());
  if (ideal.truncation_degree()) out.set_truncation_degree(*ideal.truncation_degree());
  return out;
}

namespace {

RowSpan<PrimeField> build_slice(const HomogeneousIdeal& ideal, const MonomialIndex& index, const ResourceCaps& caps) {
  Matrix<PrimeField> rows(ideal.field(), 0, index.size());
  for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
    const long shift = index.degree() - ideal.generator_degree(j);
    if (shift < 0) continue;
    const std::size_t count = count_monomials(ideal.nvars(), shift, ideal.weights());
    if (rows.rows() + count > caps.max_dim) throw ResourceError("ideal slice needs more generator rows than the dimension cap");
    MonomialIndex shifts(ideal.nvars(), shift, ideal.weights());
    for (const auto& mono : shifts.monomials()) rows.append_row(shifted_vector(index, mono, ideal.generators()[j]));
  }
  return RowSpan<PrimeField>(rows);
}

}  // namespace

IdealSlice::IdealSlice(const HomogeneousIdeal& ideal, long d, const ResourceCaps& caps)
    : index_(capped_index(ideal.nvars(), d, ideal.weights(), caps)), span_(build_slice(ideal, index_, caps)) {}

bool IdealSlice::contains(const FpPoly& p) const {
  if (p.is_zero()) return true;
  return span_.contains(index_.to_vector(p));
}

IdealSlice ideal_slice(const HomogeneousIdeal& ideal, long d, const ResourceCaps& caps) {
  if (d < 0) throw std::invalid_argument("slice degree must be nonnegative");
  return IdealSlice(ideal, d, caps);
}

bool ideal_contains(const HomogeneousIdeal& ideal, const FpPoly& p, const ResourceCaps& caps) {
  check_ring(ideal.field(), ideal.nvars(), p, "polynomial");
  for (const auto& [d, component] : p.homogeneous_components(ideal.weights()))
    if (!IdealSlice(ideal, d, caps).contains(component)) return false;
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Split: return "Split";
    case Verdict::NotDetected: return "NotDetected";
    case Verdict::FPure: return "FPure";
    case Verdict::NotFPure: return "NotFPure";
  }
  return "?";
}

bool has_low_monomial(const FpPoly& f, std::uint64_t q) {
  for (const auto& [e, c] : f.terms())
    if (std::all_of(e.begin(), e.end(), [q](int x) { return std::uint64_t(x) < q; })) return true;
  return false;
}

FrobeniusProbeResult fedder_fpure(const HomogeneousIdeal& ideal, const ResourceCaps& caps) {
  check_common_caps(ideal, caps);
  const std::uint64_t q = checked_power(ideal.characteristic(), 1, caps);
  auto result = search_witness(ideal, ideal.one(), q, caps);
  result.verdict = result.witness ? Verdict::FPure : Verdict::NotFPure;
  if (result.verdict == Verdict::NotFPure)
    result.note = "every element of (I^[p] : I) up to degree " + std::to_string(result.degree_bound) + " lies in m^[p]";
  else
    result.note = "witness lies in (I^[p] : I) and outside m^[p]";
  if (result.truncation_degree)
    result.note += "; ideal generators truncated at degree " + std::to_string(*result.truncation_degree);
  return result;
}

FrobeniusProbeResult splitting_probe(const HomogeneousIdeal& ideal, const FpPoly& c, int r, const ResourceCaps& caps) {
  check_common_caps(ideal, caps);
  check_ring(ideal.field(), ideal.nvars(), c, "multiplier");
  if (c.is_zero()) throw std::invalid_argument("multiplier c must be nonzero");
  if (!c.is_homogeneous(ideal.weights())) throw std::invalid_argument("multiplier c must be homogeneous");
  const std::uint64_t q = checked_power(ideal.characteristic(), r, caps);
  auto result = search_witness(ideal, c, q, caps);
  result.verdict = result.witness ? Verdict::Split : Verdict::NotDetected;
  if (result.verdict == Verdict::NotDetected)
    result.note = "no splitting of c*F^" + std::to_string(r) + " detected for this c and r; other c or r may split";
  else
    result.note = "witness lies in c*(I^[q] : I) and outside m^[q]";
  if (result.truncation_degree)
    result.note += "; ideal generators truncated at degree " + std::to_string(*result.truncation_degree);
  return result;
}

bool verify_splitting_witness(const HomogeneousIdeal& ideal, const FpPoly& c, const FrobeniusProbeResult& result,
                              const ResourceCaps& caps) {
  if (!result.positive() || !result.witness || !result.cofactor) return false;
  const FpPoly& f = *result.witness;
  const FpPoly& h = *result.cofactor;
  if (!(f == c * h)) return false;
  if (!has_low_monomial(f, result.q)) return false;
  const HomogeneousIdeal frob = frobenius_power(ideal, result.q);
  for (const auto& g : ideal.generators())
    if (!ideal_contains(frob, h * g, caps)) return false;
  return true;
}

std::vector<TightClosureStep> tight_closure_probe(const HomogeneousIdeal& ideal, const FpPoly& x, const FpPoly& c, int r_max,
                                                  const ResourceCaps& caps) {
  check_common_caps(ideal, caps);
  check_ring(ideal.field(), ideal.nvars(), x, "candidate");
  check_ring(ideal.field(), ideal.nvars(), c, "multiplier");
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  std::vector<TightClosureStep> steps;
  for (int r = 1; r <= r_max; ++r) {
    const std::uint64_t q = checked_power(ideal.characteristic(), r, caps);
    const FpPoly target = c * x.pow(q);
    steps.push_back({r, q, ideal_contains(frobenius_power(ideal, q), target, caps)});
  }
  return steps;
}

}  // namespace detinv
