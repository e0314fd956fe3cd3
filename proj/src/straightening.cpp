#include "detinv/straightening.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "detinv/matrix.hpp"
#include "detinv/monomial_index.hpp"

namespace detinv {
namespace {

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Column index over the union of supports of a set of polynomials.
class SupportIndex {
 public:
  void add(const QPoly& p) {
    for (const auto& [e, c] : p.terms()) pos_.try_emplace(e, pos_.size());
  }
  std::size_t size() const { return pos_.size(); }
  std::vector<mpq_class> vector_of(const QPoly& p) const {
    std::vector<mpq_class> v(pos_.size(), 0);
    for (const auto& [e, c] : p.terms()) v[pos_.at(e)] = c;
    return v;
  }

 private:
  std::map<Exponent, std::size_t> pos_;
};

Matrix<RationalField> expansion_matrix(const std::vector<QPoly>& polys, const SupportIndex& index) {
  Matrix<RationalField> m(RationalField{}, 0, index.size());
  for (const auto& p : polys) m.append_row(index.vector_of(p));
  return m;
}

}  // namespace

QPoly minor_polynomial(const Minor& a, int m, int n) {
  if (!a.fits(m, n))
    throw std::invalid_argument("minor " + a.to_string() + " does not fit a " + std::to_string(m) + "x" + std::to_string(n) + " matrix");
  const std::size_t nvars = std::size_t(m) * std::size_t(n);
  QPoly out(RationalField{}, nvars);
  std::vector<int> perm(std::size_t(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  Exponent e(nvars, 0);
  do {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < a.size(); ++i) ++e[entry_variable(a.rows[i], a.cols[perm[i]], n)];
    out.add_term(e, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string StraighteningResult::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " ";
    out += sgn(t.coefficient) < 0 ? "-" : "+";
    out += mpq_class(abs(t.coefficient)).get_str();
    out += " " + t.monomial.to_string();
  }
  return out;
}

Straightener::Straightener(int m, int n) : poset_(m, n) {
  minor_polys_.reserve(poset_.size());
  for (const auto& x : poset_.elements()) minor_polys_.push_back(minor_polynomial(x, m, n));
}

QPoly Straightener::empty_product() const {
  return QPoly::constant(RationalField{}, std::size_t(m()) * std::size_t(n()), 1);
}

QPoly Straightener::expand(std::span<const Minor> factors) const {
  QPoly out = empty_product();
  for (const auto& f : factors) out = out * minor_polys_[poset_.require_index(f)];
  return out;
}

QPoly Straightener::expand(const StraighteningResult& r) const {
  QPoly out(RationalField{}, std::size_t(m()) * std::size_t(n()));
  for (const auto& t : r.terms) out = out + expand(t.monomial).scaled(t.coefficient);
  return out;
}

std::vector<StandardMonomial> Straightener::standard_monomials_with_content(const std::vector<int>& row_content,
                                                                            const std::vector<int>& col_content) const {
  if (row_content.size() != std::size_t(m()) || col_content.size() != std::size_t(n()))
    throw std::invalid_argument("content vectors must have lengths m and n");
  const int degree = std::accumulate(row_content.begin(), row_content.end(), 0);
  if (degree != std::accumulate(col_content.begin(), col_content.end(), 0)) return {};

  std::vector<int> rows_left = row_content, cols_left = col_content;
  std::vector<std::size_t> chain;
  std::vector<StandardMonomial> out;

  auto fits = [&](const Minor& x) {
    for (int r : x.rows)
      if (rows_left[r - 1] == 0) return false;
    for (int c : x.cols)
      if (cols_left[c - 1] == 0) return false;
    return true;
  };
  auto take = [&](const Minor& x, int delta) {
    for (int r : x.rows) rows_left[r - 1] += delta;
    for (int c : x.cols) cols_left[c - 1] += delta;
  };

  std::function<void(std::span<const std::size_t>, int)> extend = [&](std::span<const std::size_t> candidates, int remaining) {
    if (remaining == 0) {
      std::vector<Minor> factors;
      for (auto i : chain) factors.push_back(poset_[i]);
      out.emplace_back(std::move(factors));
      return;
    }
    for (std::size_t j : candidates) {
      const Minor& x = poset_[j];
      if (x.size() > remaining || !fits(x)) continue;
      take(x, -1);
      chain.push_back(j);
      extend(poset_.upper_set(j), remaining - x.size());
      chain.pop_back();
      take(x, +1);
    }
  };
  std::vector<std::size_t> all(poset_.size());
  std::iota(all.begin(), all.end(), 0);
  extend(all, degree);
  return out;
}

StraighteningResult Straightener::straighten(std::vector<Minor> factors) const {
  for (const auto& f : factors) poset_.require_index(f);
  sort_chain_order(factors);
  StraighteningResult result{factors, {}};

  std::vector<int> rows(std::size_t(m()), 0), cols(std::size_t(n()), 0);
  for (const auto& f : factors) {
    for (int r : f.rows) ++rows[r - 1];
    for (int c : f.cols) ++cols[c - 1];
  }
  const auto basis = standard_monomials_with_content(rows, cols);
  const QPoly target = expand(factors);

  std::vector<QPoly> expansions;
  expansions.reserve(basis.size());
  SupportIndex index;
  index.add(target);
  for (const auto& v : basis) {
    expansions.push_back(expand(v));
    index.add(expansions.back());
  }
  const auto coords = solve_membership(index.vector_of(target), expansion_matrix(expansions, index));
  if (!coords) {
    std::string product;
    for (const auto& f : factors) product += f.to_string();
    throw std::logic_error("standard monomials do not span the product " + product);
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn((*coords)[i]) != 0) result.terms.push_back({(*coords)[i], basis[i]});
  std::sort(result.terms.begin(), result.terms.end(),
            [](const StraighteningTerm& a, const StraighteningTerm& b) { return a.monomial < b.monomial; });
  return result;
}

StraighteningResult straighten(const std::vector<Minor>& factors, int m, int n) {
  return Straightener(m, n).straighten(factors);
}

BasisReport verify_basis(int m, int n, int d) {
  Straightener s(m, n);
  BasisReport report;
  report.m = m;
  report.n = n;
  report.d = d;
  report.expected = binomial(long(m) * n + d - 1, d);

  // Group standard monomials by row and column content.
  std::map<std::vector<int>, std::vector<QPoly>> blocks;
  for_each_standard_monomial(s.poset(), d, [&](std::span<const std::size_t> chain) {
    std::vector<int> key(std::size_t(m + n), 0);
    std::vector<Minor> factors;
    for (auto i : chain) {
      const Minor& x = s.poset()[i];
      for (int r : x.rows) ++key[r - 1];
      for (int c : x.cols) ++key[std::size_t(m) + c - 1];
      factors.push_back(x);
    }
    blocks[key].push_back(s.expand(factors));
    ++report.count;
  });
  for (const auto& [key, polys] : blocks) {
    SupportIndex index;
    for (const auto& p : polys) index.add(p);
    report.rank += rank(expansion_matrix(polys, index));
  }
  report.passed = report.rank == report.count && mpz_class(report.count) == report.expected;
  return report;
}

std::size_t dense_basis_rank(int m, int n, int d) {
  Straightener s(m, n);
  MonomialIndex index(std::size_t(m) * std::size_t(n), d);
  Matrix<RationalField> mat(RationalField{}, 0, index.size());
  for_each_standard_monomial(s.poset(), d, [&](std::span<const std::size_t> chain) {
    std::vector<Minor> factors;
    for (auto i : chain) factors.push_back(s.poset()[i]);
    mat.append_row(index.to_vector(s.expand(factors)));
  });
  return rank(mat);
}

SubaslReport verify_subasl_condition(const BlockSpec& b, int n) { return verify_subasl_condition(b, Straightener(b.m, n)); }

SubaslReport verify_subasl_condition(const BlockSpec& b, const Straightener& s) {
  validate_blocks(b);
  if (s.m() != b.m) throw std::invalid_argument("straightener and block spec disagree on m");
  SubaslReport report;
  report.spec = b;
  report.n = s.n();
  const auto gamma = gamma_generators(b, s.n());
  report.generators = gamma.size();
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = i + 1; j < gamma.size(); ++j) {
      const Minor& xi = gamma[i];
      const Minor& eta = gamma[j];
      if (leq(xi, eta) || leq(eta, xi)) continue;
      ++report.incomparable_pairs;
      const auto result = s.straighten({xi, eta});
      if (result.terms.empty()) report.violations.push_back({xi, eta, "product straightened to zero"});
      for (const auto& t : result.terms) {
        if (!is_gamma_standard(t.monomial, b))
          report.violations.push_back({xi, eta, "monomial " + t.monomial.to_string() + " leaves Γ"});
        const bool has_lower = std::any_of(t.monomial.factors().begin(), t.monomial.factors().end(),
                                           [&](const Minor& f) { return leq(f, xi) && leq(f, eta); });
        if (!has_lower)
          report.violations.push_back({xi, eta, "monomial " + t.monomial.to_string() + " has no factor below both"});
      }
    }
  return report;
}

WeightReport verify_weight_increase(int m, int n, int degree_bound) {
  return verify_weight_increase(Straightener(m, n), degree_bound);
}

WeightReport verify_weight_increase(const Straightener& s, int degree_bound) {
  WeightReport report;
  report.m = s.m();
  report.n = s.n();
  const auto& p = s.poset();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i].size() + p[j].size() > degree_bound) continue;
      if (p.comparable(i, j)) {
        ++report.pairs_skipped;
        continue;
      }
      ++report.pairs_checked;
      const std::vector<Minor> pair{p[i], p[j]};
      const mpz_class base = monomial_weight(p, pair);
      for (const auto& t : s.straighten(pair).terms) {
        ++report.monomials_checked;
        const mpz_class w = monomial_weight(p, t.monomial.factors());
        if (w <= base)
          report.violations.push_back({p[i], p[j], "weight " + w.get_str() + " of " + t.monomial.to_string() +
                                                       " does not exceed " + base.get_str()});
      }
    }
  return report;
}

}  // namespace detinv
