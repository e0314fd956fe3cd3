#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "detinv/polynomial.hpp"

namespace detinv {

/// Bijection between the monomials of a graded slice and column positions.
/// Monomials are listed in graded lexicographic order: lower degree first
/// (only relevant in UpTo mode), then lexicographically descending
/// exponent vectors, so x1^d comes first.
class MonomialIndex {
 public:
  enum class Mode { Exact, UpTo };

  /// Monomials in `nvars` variables of (weighted) degree `degree`. Empty
  /// weights mean standard grading.
  MonomialIndex(std::size_t nvars, long degree, std::vector<int> weights = {}, Mode mode = Mode::Exact);

  std::size_t nvars() const { return nvars_; }
  long degree() const { return degree_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::optional<std::size_t> find(const Exponent& e) const;

  /// Dense coefficient vector of p; throws if p has a term outside the slice.
  template <class Ring>
  std::vector<typename Ring::Element> to_vector(const SparsePoly<Ring>& p) const {
    std::vector<typename Ring::Element> v(size(), p.ring().zero());
    for (const auto& [e, c] : p.terms()) {
      auto pos = find(e);
      if (!pos) throw std::invalid_argument("polynomial has a term outside the monomial slice");
      v[*pos] = c;
    }
    return v;
  }

  template <class Ring>
  SparsePoly<Ring> to_poly(const Ring& ring, const std::vector<typename Ring::Element>& v) const {
    if (v.size() != size()) throw std::invalid_argument("vector length does not match slice");
    SparsePoly<Ring> p(ring, nvars_);
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(monomials_[i], v[i]);
    return p;
  }

 private:
  std::size_t nvars_;
  long degree_;
  std::vector<int> weights_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> position_;
};

/// Number of monomials of weighted degree exactly `degree` (no enumeration).
std::size_t count_monomials(std::size_t nvars, long degree, const std::vector<int>& weights = {});

}  // namespace detinv
