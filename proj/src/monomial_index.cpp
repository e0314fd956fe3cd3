#include "detinv/monomial_index.hpp"

#include <limits>

namespace detinv {
namespace {

int weight_of(const std::vector<int>& weights, std::size_t i) { return weights.empty() ? 1 : weights[i]; }

// Lexicographically descending enumeration of exponent vectors with the
// given weighted degree.
void enumerate(std::size_t var, long remaining, const std::vector<int>& weights, Exponent& current,
               std::vector<Exponent>& out) {
  const std::size_t nvars = current.size();
  if (var == nvars) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int w = weight_of(weights, var);
  if (var + 1 == nvars) {
    if (remaining % w == 0) {
      current[var] = int(remaining / w);
      out.push_back(current);
      current[var] = 0;
    }
    return;
  }
  for (long k = remaining / w; k >= 0; --k) {
    current[var] = int(k);
    enumerate(var + 1, remaining - k * w, weights, current, out);
  }
  current[var] = 0;
}

}  // namespace

MonomialIndex::MonomialIndex(std::size_t nvars, long degree, std::vector<int> weights, Mode mode)
    : nvars_(nvars), degree_(degree), weights_(std::move(weights)) {
  if (!weights_.empty() && weights_.size() != nvars_) throw std::invalid_argument("weight count must match variable count");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("variable weights must be positive");
  if (degree_ >= 0) {
    const long low = mode == Mode::Exact ? degree_ : 0;
    for (long d = low; d <= degree_; ++d) {
      if (nvars_ == 0) {
        if (d == 0) monomials_.emplace_back();
        continue;
      }
      Exponent current(nvars_, 0);
      enumerate(0, d, weights_, current, monomials_);
    }
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) position_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialIndex::find(const Exponent& e) const {
  auto it = position_.find(e);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::size_t count_monomials(std::size_t nvars, long degree, const std::vector<int>& weights) {
  if (degree < 0) return 0;
  // counts[d] = monomials of degree d in the variables seen so far
  std::vector<std::size_t> counts(std::size_t(degree) + 1, 0);
  counts[0] = 1;
  constexpr auto cap = std::numeric_limits<std::size_t>::max() / 2;
  for (std::size_t v = 0; v < nvars; ++v) {
    const int w = weight_of(weights, v);
    for (long d = w; d <= degree; ++d) {
      counts[d] += counts[d - w];
      if (counts[d] > cap) counts[d] = cap;
    }
  }
  return counts[std::size_t(degree)];
}

}  // namespace detinv
