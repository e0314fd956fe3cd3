// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "detinv/combinatorics.hpp"
#include "detinv/fsingularity.hpp"
#include "detinv/gamma.hpp"
#include "detinv/matrix.hpp"
#include "detinv/minor_lattice.hpp"
#include "detinv/poly_parse.hpp"
#include "detinv/straightening.hpp"

using namespace detinv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // 0 = no time limit
  std::function<Outcome()> body;
};

std::string str(const mpz_class& v) { return v.get_str(); }

Outcome asl_basis_count() {
  Outcome o;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const MinorPoset p(m, n);
      for (int d = 0; d <= 6; ++d) {
        mpz_class listed = 0;
        for_each_standard_monomial(p, d, [&](std::span<const std::size_t>) { ++listed; });
        const mpz_class expected = binomial(long(m) * n + d - 1, d);
        o.require(listed == expected, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " +
                                          str(listed) + " != " + str(expected));
      }
    }
  return o;
}

Outcome shape_refinement() {
  Outcome o;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 5; ++d) {
        const auto counts = count_by_shape(m, n, d);
        mpz_class covered = 0;
        for (const auto& l : partitions_of(d, d)) {
          const auto it = counts.find(l);
          const mpz_class got = it == counts.end() ? mpz_class(0) : it->second;
          const mpz_class want = ssyt_count(l, m) * ssyt_count(l, n);
          covered += got;
          o.require(got == want, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " shape " + l.to_string());
        }
        o.require(covered == binomial(long(m) * n + d - 1, d), "shapes outside the partitions of d");
      }
  return o;
}

Outcome cauchy_identity() {
  Outcome o;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int d = 0; d <= 6; ++d)
        o.require(cauchy_dim(m, n, d) == binomial(long(m) * n + d - 1, d),
                  "m=" + std::to_string(m) + " n=" + std::to_string(n) + " d=" + std::to_string(d));
  return o;
}

Outcome main_identity() {
  Outcome o;
  std::vector<BlockSpec> specs;
  for (int m = 1; m <= 4; ++m)
    for (auto& b : all_block_specs(m, 3)) specs.push_back(std::move(b));
  specs.push_back(BlockSpec::parse(4, "0,1,2,3,4", "T,T,T,T"));  // full flag
  bool saw_chain = false, saw_flag = false;
  std::size_t cells = 0;
  for (const auto& b : specs) {
    saw_chain = saw_chain || b == BlockSpec::parse(2, "0,1,2", "T,S");
    saw_flag = saw_flag || b == BlockSpec::parse(3, "0,1,2,3", "T,T,T");
    for (int n = 1; n <= 4; ++n) {
      const auto report = verify_main_identity(b, n, 5);
      for (const auto& r : report.rows) {
        ++cells;
        o.require(r.equal, b.to_string() + " n=" + std::to_string(n) + " d=" + std::to_string(r.d) + ": gamma " + str(r.gamma) +
                               " theta " + str(r.theta));
      }
    }
  }
  o.require(saw_chain && saw_flag, "sweep misses a named configuration");
  if (o.ok) o.detail = std::to_string(specs.size()) + " specs, " + std::to_string(cells) + " cells";
  return o;
}

Outcome basis_verification() {
  Outcome o;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d) {
        const auto r = verify_basis(m, n, d);
        o.require(r.passed, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " d=" + std::to_string(d) + ": rank " +
                                std::to_string(r.rank) + " of " + std::to_string(r.count));
      }
  return o;
}

Outcome subasl_hypotheses() {
  Outcome o;
  std::size_t pairs = 0, specs = 0;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const Straightener s(m, n);
      for (const auto& b : all_block_specs(m, 3)) {
        ++specs;
        const auto r = verify_subasl_condition(b, s);
        pairs += r.incomparable_pairs;
        if (!r.passed())
          o.require(false, b.to_string() + " n=" + std::to_string(n) + ": " + r.violations.front().xi.to_string() + "*" +
                               r.violations.front().eta.to_string() + " " + r.violations.front().reason);
      }
      const auto w = verify_weight_increase(s, m + n);
      if (!w.passed())
        o.require(false, "weight: " + w.violations.front().xi.to_string() + "*" + w.violations.front().eta.to_string() + " " +
                             w.violations.front().reason);
    }
  if (o.ok) o.detail = std::to_string(specs) + " specs, " + std::to_string(pairs) + " incomparable Γ-pairs";
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> dim(1, 3), count(1, 3);
  std::map<std::pair<int, int>, Straightener> cache;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = dim(rng), n = dim(rng);
    const Straightener& s = cache.try_emplace({m, n}, m, n).first->second;
    std::uniform_int_distribution<std::size_t> pick(0, s.poset().size() - 1);
    std::vector<Minor> factors;
    for (int k = count(rng); k > 0; --k) factors.push_back(s.poset()[pick(rng)]);
    const auto r = s.straighten(factors);
    std::string product;
    for (const auto& f : factors) product += f.to_string();
    o.require(s.expand(r) == s.expand(factors), "product " + product + " in " + std::to_string(m) + "x" + std::to_string(n));
  }
  return o;
}

HomogeneousIdeal fp_ideal(std::uint32_t p, std::size_t v, const char* gens, std::vector<int> weights = {}) {
  const PrimeField f(p);
  std::vector<FpPoly> g;
  for (const auto& q : parse_polynomial_list(gens, {v, 0})) g.push_back(to_field(f, q));
  return HomogeneousIdeal(f, v, std::move(g), std::move(weights));
}

Outcome fpurity_probes() {
  Outcome o;
  const char* det = "x1*x4 - x2*x3";
  for (std::uint32_t p : {2u, 3u}) {
    const auto I = fp_ideal(p, 4, det);
    const auto r = fedder_fpure(I);
    o.require(r.verdict == Verdict::FPure, "2x2 minor at p=" + std::to_string(p) + ": " + to_string(r.verdict));
    o.require(verify_splitting_witness(I, I.one(), r), "2x2 minor witness at p=" + std::to_string(p) + " fails re-verification");
  }
  const auto square = fedder_fpure(fp_ideal(2, 1, "x1^2"));
  o.require(square.verdict == Verdict::NotFPure, "(x^2): " + to_string(square.verdict));
  const auto cusp = fedder_fpure(fp_ideal(2, 2, "x2^2 - x1^3", {2, 3}));
  o.require(cusp.verdict == Verdict::NotFPure, "cusp: " + to_string(cusp.verdict));

  const auto I = fp_ideal(2, 4, det);
  const FpPoly c = FpPoly::variable(I.field(), 4, 0);
  const auto split = splitting_probe(I, c, 1);
  o.require(split.verdict == Verdict::Split, "splitting with c=x11: " + to_string(split.verdict));
  o.require(verify_splitting_witness(I, c, split), "splitting witness fails re-verification");
  return o;
}

// Rank of the degree-d products of the Segre generators x_i*y_j (i, j in {1,2})
// evaluated in K[x1, x2, y1, y2].
std::size_t segre_rank(int d) {
  using Q = SparsePoly<RationalField>;
  auto var = [](std::size_t i) { return Q::variable(RationalField{}, 4, i); };
  const std::vector<Q> gens{var(0) * var(2), var(0) * var(3), var(1) * var(2), var(1) * var(3)};
  std::vector<Q> products;
  std::function<void(std::size_t, int, Q)> build = [&](std::size_t from, int left, Q acc) {
    if (left == 0) {
      products.push_back(acc);
      return;
    }
    for (std::size_t k = from; k < gens.size(); ++k) build(k, left - 1, acc * gens[k]);
  };
  build(0, d, Q::constant(RationalField{}, 4, 1));
  std::map<Exponent, std::size_t> cols;
  for (const auto& p : products)
    for (const auto& [e, c] : p.terms()) cols.try_emplace(e, cols.size());
  Matrix<RationalField> mat({}, products.size(), cols.size());
  for (std::size_t i = 0; i < products.size(); ++i)
    for (const auto& [e, c] : products[i].terms()) mat(i, cols.at(e)) = c;
  return rank(mat);
}

Outcome determinantal_hilbert() {
  Outcome o;
  for (int d = 0; d <= 3; ++d) {
    const mpz_class got = hilbert_determinantal(2, 2, 1, d);
    const std::size_t want = segre_rank(d);
    o.require(got == mpz_class(std::to_string(want)), "d=" + std::to_string(d) + ": " + str(got) + " != " + std::to_string(want));
  }
  return o;
}

Minor brute_bound(const MinorPoset& p, const Minor& a, const Minor& b, bool lower) {
  std::vector<Minor> bounds;
  for (const auto& x : p.elements())
    if (lower ? (leq(x, a) && leq(x, b)) : (leq(a, x) && leq(b, x))) bounds.push_back(x);
  for (const auto& x : bounds) {
    bool extreme = true;
    for (const auto& y : bounds) extreme = extreme && (lower ? leq(y, x) : leq(x, y));
    if (extreme) return x;
  }
  throw std::logic_error("bound does not exist for " + a.to_string() + ", " + b.to_string());
}

Outcome lattice_axioms() {
  Outcome o;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const MinorPoset p(m, n);
      const auto el = p.elements();
      const std::string where = " in " + std::to_string(m) + "x" + std::to_string(n);
      for (const auto& a : el) {
        o.require(leq(a, a), "reflexivity" + where);
        for (const auto& b : el) {
          o.require(!(leq(a, b) && leq(b, a)) || a == b, "antisymmetry" + where);
          o.require(meet(a, b) == brute_bound(p, a, b, true), "meet " + a.to_string() + "," + b.to_string() + where);
          o.require(join(a, b) == brute_bound(p, a, b, false), "join " + a.to_string() + "," + b.to_string() + where);
          for (const auto& c : el) {
            o.require(!(leq(a, b) && leq(b, c)) || leq(a, c), "transitivity" + where);
            o.require(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)), "meet distributivity" + where);
            o.require(join(a, meet(b, c)) == meet(join(a, b), join(a, c)), "join distributivity" + where);
          }
        }
      }
    }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ASL basis count", 10, asl_basis_count},
      {2, "shape refinement", 30, shape_refinement},
      {3, "Cauchy identity", 0, cauchy_identity},
      {4, "Hilbert functions of K[Γ] and S^H agree", 300, main_identity},
      {5, "linear-algebra basis verification", 120, basis_verification},
      {6, "subASL hypotheses and weight increase", 0, subasl_hypotheses},
      {7, "straightening round trip", 0, round_trip},
      {8, "F-purity probes", 60, fpurity_probes},
      {9, "determinantal Hilbert function", 0, determinantal_hilbert},
      {10, "lattice axioms", 0, lattice_axioms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_s == 0 || secs < c.budget_s;
    if (o.ok && !in_time) o.detail = "over the time budget";
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    char timing[64];
    if (c.budget_s > 0) std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_s);
    else std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::printf("%s %2d %-44s %s%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), timing, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
