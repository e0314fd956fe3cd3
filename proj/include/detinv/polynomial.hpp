#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detinv/field.hpp"

namespace detinv {

/// Exponent vector of a monomial; length equals the variable count.
using Exponent = std::vector<int>;

/// Weighted degree of an exponent vector. Empty weights mean all ones.
inline long weighted_degree(const Exponent& e, const std::vector<int>& weights) {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += long(e[i]) * (weights.empty() ? 1 : weights[i]);
  return d;
}

/// Default variable names x1, x2, ...
inline std::string default_variable_name(std::size_t i) { return "x" + std::to_string(i + 1); }

/// Sparse multivariate polynomial. Zero coefficients are never stored.
template <class Ring>
class SparsePoly {
 public:
  using Element = typename Ring::Element;
  using Terms = std::map<Exponent, Element>;

  SparsePoly(Ring ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

  static SparsePoly constant(Ring ring, std::size_t nvars, const Element& c) {
    SparsePoly p(std::move(ring), nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static SparsePoly monomial(Ring ring, const Exponent& e, const Element& c) {
    SparsePoly p(std::move(ring), e.size());
    p.add_term(e, c);
    return p;
  }
  static SparsePoly variable(Ring ring, std::size_t nvars, std::size_t index) {
    Exponent e(nvars, 0);
    e.at(index) = 1;
    auto one = ring.one();
    return monomial(std::move(ring), e, one);
  }

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Element coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add_term(const Exponent& e, const Element& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }

  SparsePoly operator+(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  SparsePoly operator-() const {
    SparsePoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
    return r;
  }
  SparsePoly operator-(const SparsePoly& o) const { return *this + (-o); }

  SparsePoly operator*(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r(ring_, nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ring_.mul(ca, cb));
      }
    return r;
  }

  SparsePoly scaled(const Element& s) const {
    SparsePoly r(ring_, nvars_);
    if (ring_.is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, ring_.mul(c, s));
    return r;
  }

  SparsePoly pow(std::uint64_t k) const {
    SparsePoly result = constant(ring_, nvars_, ring_.one());
    SparsePoly base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  bool operator==(const SparsePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// True when every term has the same weighted degree (zero counts as homogeneous).
  bool is_homogeneous(const std::vector<int>& weights = {}) const {
    if (terms_.empty()) return true;
    const long d = weighted_degree(terms_.begin()->first, weights);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return weighted_degree(t.first, weights) == d; });
  }

  /// Weighted degree of the leading term; -1 for the zero polynomial.
  long degree(const std::vector<int>& weights = {}) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree(e, weights));
    return d;
  }

  std::map<long, SparsePoly> homogeneous_components(const std::vector<int>& weights = {}) const {
    std::map<long, SparsePoly> out;
    for (const auto& [e, c] : terms_)
      out.try_emplace(weighted_degree(e, weights), ring_, nvars_).first->second.add_term(e, c);
    return out;
  }

  /// Re-expresses the coefficients in another ring through `convert`.
  template <class Target, class Convert>
  SparsePoly<Target> map_coefficients(Target target, Convert convert) const {
    SparsePoly<Target> r(target, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, convert(c));
    return r;
  }

  /// Human-readable form, terms by descending total degree then descending
  /// lexicographic exponent, e.g. "x1*x4 - x2*x3". Parses back with
  /// parse_polynomial when the default names are used.
  std::string to_string(const std::function<std::string(std::size_t)>& name = default_variable_name) const {
    if (terms_.empty()) return "0";
    std::vector<const typename Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
      const long da = weighted_degree(a->first, {});
      const long db = weighted_degree(b->first, {});
      if (da != db) return da > db;
      return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
      std::string coeff = ring_.to_string(t->second);
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += name(i);
        if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
      }
      if (mono.empty())
        out += coeff;
      else if (coeff == "1")
        out += mono;
      else
        out += coeff + "*" + mono;
    }
    return out;
  }

 private:
  void check_compatible(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
  }

  Ring ring_;
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace detinv
