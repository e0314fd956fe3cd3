#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "detinv/straightening.hpp"

using namespace detinv;

namespace {
Minor M(std::string_view s) { return Minor::parse(s); }

QPoly entry(int i, int j, int m, int n) {
  return QPoly::variable(RationalField{}, std::size_t(m) * std::size_t(n), entry_variable(i, j, n));
}
}  // namespace

TEST_CASE("minor polynomials") {
  CHECK(minor_polynomial(M("[1|1]"), 2, 2) == entry(1, 1, 2, 2));
  CHECK(minor_polynomial(M("[12|12]"), 2, 2) == entry(1, 1, 2, 2) * entry(2, 2, 2, 2) - entry(1, 2, 2, 2) * entry(2, 1, 2, 2));
  CHECK(minor_polynomial(M("[12|13]"), 2, 3) == entry(1, 1, 2, 3) * entry(2, 3, 2, 3) - entry(1, 3, 2, 3) * entry(2, 1, 2, 3));
  CHECK(minor_polynomial(M("[123|123]"), 3, 3).term_count() == 6);
  CHECK_THROWS_AS(minor_polynomial(M("[3|1]"), 2, 2), std::invalid_argument);
}

TEST_CASE("straighten the incomparable pair of a 2x2 matrix") {
  const auto r = straighten({M("[2|1]"), M("[1|2]")}, 2, 2);
  CHECK(r.to_string() == "+1 [1|1][2|2] -1 [12|12]");
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].monomial == StandardMonomial({M("[1|1]"), M("[2|2]")}));
  CHECK(r.terms[0].coefficient == 1);
  CHECK(r.terms[1].monomial == StandardMonomial({M("[12|12]")}));
  CHECK(r.terms[1].coefficient == -1);
  CHECK(straighten({M("[1|2]"), M("[2|1]")}, 2, 2).to_string() == r.to_string());
}

TEST_CASE("standard input straightens to itself") {
  const Straightener s(3, 3);
  for (int d = 0; d <= 3; ++d)
    for (const auto& v : standard_monomials(3, 3, d)) {
      const auto r = s.straighten(v.factors());
      REQUIRE(r.terms.size() == 1);
      CHECK(r.terms[0].coefficient == 1);
      CHECK(r.terms[0].monomial == v);
    }
  CHECK(s.straighten({}).to_string() == "+1 1");
}

TEST_CASE("content blocks partition the slice") {
  const Straightener s(2, 3);
  for (int d = 0; d <= 3; ++d) {
    std::size_t total = 0;
    std::set<StandardMonomial> seen;
    for (const auto& v : standard_monomials(2, 3, d)) {
      std::vector<int> rows(2, 0), cols(3, 0);
      for (const auto& f : v.factors()) {
        for (int r : f.rows) ++rows[std::size_t(r - 1)];
        for (int c : f.cols) ++cols[std::size_t(c - 1)];
      }
      const auto block = s.standard_monomials_with_content(rows, cols);
      CHECK(std::find(block.begin(), block.end(), v) != block.end());
      if (seen.insert(v).second) ++total;
    }
    CHECK(mpz_class(total) == binomial(6 + d - 1, d));
  }
}

TEST_CASE("random round trip") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 3), count(1, 3);
  std::map<std::pair<int, int>, Straightener> cache;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = dim(rng), n = dim(rng);
    const Straightener& s = cache.try_emplace({m, n}, m, n).first->second;
    std::uniform_int_distribution<std::size_t> pick(0, s.poset().size() - 1);
    std::vector<Minor> factors;
    for (int k = count(rng); k > 0; --k) factors.push_back(s.poset()[pick(rng)]);
    const auto r = s.straighten(factors);
    CHECK(s.expand(r) == s.expand(factors));
    for (const auto& t : r.terms) {
      CHECK(t.coefficient.get_den() == 1);
      CHECK(t.monomial.degree() == r.terms.front().monomial.degree());
    }
  }
}

TEST_CASE("pair coefficients are integral") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const Straightener s(m, n);
      const auto& p = s.poset();
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          if (p.comparable(i, j)) continue;
          for (const auto& t : s.straighten({p[i], p[j]}).terms) CHECK(t.coefficient.get_den() == 1);
        }
    }
}

TEST_CASE("verify_basis") {
  const auto r22 = verify_basis(2, 2, 2);
  CHECK(r22.passed);
  CHECK(r22.rank == 10);
  const auto r21 = verify_basis(2, 2, 1);
  CHECK(r21.passed);
  CHECK(r21.rank == 4);
  for (int d = 0; d <= 5; ++d) CHECK(verify_basis(1, 1, d).rank == 1);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 3; ++d) CHECK(verify_basis(m, n, d).passed);
}

TEST_CASE("blockwise rank matches the dense rank") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 3; ++d) CHECK(verify_basis(m, n, d).rank == dense_basis_rank(m, n, d));
  CHECK(dense_basis_rank(2, 3, 4) == verify_basis(2, 3, 4).rank);
}

TEST_CASE("subASL condition") {
  const auto chain = verify_subasl_condition(BlockSpec::parse(2, "0,1,2", "T,S"), 2);
  CHECK(chain.passed());
  CHECK(chain.incomparable_pairs == 0);

  const auto full = verify_subasl_condition(BlockSpec::parse(2, "0,2", "T"), 2);
  CHECK(full.passed());
  CHECK(full.incomparable_pairs == 1);

  const auto wide = verify_subasl_condition(BlockSpec::parse(2, "0,2", "T"), 3);
  CHECK(wide.passed());
  CHECK(wide.incomparable_pairs > 0);
}

TEST_CASE("weight increase") {
  const Straightener s(2, 2);
  const std::vector<Minor> pair{M("[2|1]"), M("[1|2]")};
  CHECK(monomial_weight(s.poset(), pair) == 6);
  std::vector<mpz_class> weights;
  for (const auto& t : s.straighten(pair).terms) weights.push_back(monomial_weight(s.poset(), t.monomial.factors()));
  CHECK(weights == std::vector<mpz_class>{10, 27});

  const auto r22 = verify_weight_increase(2, 2, 4);
  CHECK(r22.passed());
  CHECK(r22.pairs_checked == 1);
  CHECK(r22.pairs_skipped == 9);
  CHECK(verify_weight_increase(2, 3, 4).passed());
}
