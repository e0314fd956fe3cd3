#include "detinv/minor_lattice.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace detinv {
namespace {

void check_increasing(const std::vector<int>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) throw std::invalid_argument(std::string(what) + " indices must be >= 1");
    if (i > 0 && v[i] <= v[i - 1]) throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
  }
}

std::vector<int> parse_index_list(std::string_view s, std::string_view whole) {
  std::vector<int> out;
  const bool comma_form = s.find(',') != std::string_view::npos;
  if (!comma_form) {
    for (char ch : s) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad character in minor " + std::string(whole));
      out.push_back(ch - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    std::string token;
    for (char ch : s.substr(start, end - start))
      if (!std::isspace(static_cast<unsigned char>(ch))) token += ch;
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("bad index list in minor " + std::string(whole));
    out.push_back(std::stoi(token));
    start = end + 1;
  }
  return out;
}

// Linear extension key: larger minors first, then lexicographic.
bool chain_key_less(const Minor& a, const Minor& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  if (a.rows != b.rows) return a.rows < b.rows;
  return a.cols < b.cols;
}

void all_subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n - (k - int(cur.size()) - 1); ++v) {
    cur.push_back(v);
    all_subsets(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Minor::Minor(std::vector<int> r, std::vector<int> c) : rows(std::move(r)), cols(std::move(c)) {
  if (rows.empty()) throw std::invalid_argument("a minor needs at least one row");
  if (rows.size() != cols.size()) throw std::invalid_argument("a minor needs as many rows as columns");
  check_increasing(rows, "row");
  check_increasing(cols, "column");
}

bool Minor::fits(int m, int n) const {
  return !rows.empty() && rows.back() <= m && cols.back() <= n;
}

std::string Minor::to_string() const {
  const bool wide = (!rows.empty() && rows.back() > 9) || (!cols.empty() && cols.back() > 9);
  auto list = [wide](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (wide && i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "[" + list(rows) + "|" + list(cols) + "]";
}

Minor Minor::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  auto body = text.substr(b, e - b);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw std::invalid_argument("minor must look like [rows|cols]: " + std::string(text));
  body = body.substr(1, body.size() - 2);
  auto bar = body.find('|');
  if (bar == std::string_view::npos || body.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("minor must contain exactly one '|': " + std::string(text));
  return Minor(parse_index_list(body.substr(0, bar), text), parse_index_list(body.substr(bar + 1), text));
}

std::strong_ordering Minor::operator<=>(const Minor& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  if (auto c = rows <=> o.rows; c != 0) return c;
  return cols <=> o.cols;
}

std::vector<Minor> parse_minor_list(std::string_view text) {
  std::vector<Minor> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    if (ch != '[') throw std::invalid_argument("expected '[' at position " + std::to_string(i) + " in minor list");
    auto close = text.find(']', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated minor at position " + std::to_string(i));
    out.push_back(Minor::parse(text.substr(i, close - i + 1)));
    i = close + 1;
  }
  return out;
}

bool leq(const Minor& a, const Minor& b) {
  if (a.size() < b.size()) return false;
  for (int i = 0; i < b.size(); ++i)
    if (b.rows[i] < a.rows[i] || b.cols[i] < a.cols[i]) return false;
  return true;
}

Minor meet(const Minor& a, const Minor& b) {
  const Minor& longer = a.size() >= b.size() ? a : b;
  const Minor& shorter = a.size() >= b.size() ? b : a;
  Minor out = longer;
  for (int i = 0; i < shorter.size(); ++i) {
    out.rows[i] = std::min(a.rows[i], b.rows[i]);
    out.cols[i] = std::min(a.cols[i], b.cols[i]);
  }
  return out;
}

Minor join(const Minor& a, const Minor& b) {
  const int u = std::min(a.size(), b.size());
  std::vector<int> rows(u), cols(u);
  for (int i = 0; i < u; ++i) {
    rows[i] = std::max(a.rows[i], b.rows[i]);
    cols[i] = std::max(a.cols[i], b.cols[i]);
  }
  return Minor(std::move(rows), std::move(cols));
}

MinorPoset::MinorPoset(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("the minor lattice needs m, n >= 1");
  for (int u = 1; u <= std::min(m, n); ++u) {
    std::vector<std::vector<int>> row_sets, col_sets;
    std::vector<int> cur;
    all_subsets(m, u, 1, cur, row_sets);
    all_subsets(n, u, 1, cur, col_sets);
    for (const auto& r : row_sets)
      for (const auto& c : col_sets) elements_.emplace_back(r, c);
  }
  std::sort(elements_.begin(), elements_.end(), chain_key_less);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  const std::size_t N = elements_.size();
  order_.assign(N * N, false);
  uppers_.resize(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (detinv::leq(elements_[i], elements_[j])) {
        order_[i * N + j] = true;
        uppers_[i].push_back(j);
      }

  coheight_.assign(N, 0);
  for (std::size_t i = N; i-- > 0;)
    for (std::size_t j : uppers_[i])
      if (j != i) coheight_[i] = std::max(coheight_[i], coheight_[j] + 1);
}

std::optional<std::size_t> MinorPoset::index_of(const Minor& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MinorPoset::require_index(const Minor& a) const {
  auto idx = index_of(a);
  if (!idx)
    throw std::invalid_argument("minor " + a.to_string() + " is not in the lattice of a " + std::to_string(m_) + "x" +
                                std::to_string(n_) + " matrix");
  return *idx;
}

mpz_class monomial_weight(const MinorPoset& p, std::span<const Minor> factors) {
  mpz_class w = 0;
  for (const auto& f : factors) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 3, static_cast<unsigned long>(p.coheight(f)));
    w += t;
  }
  return w;
}

void sort_chain_order(std::vector<Minor>& factors) { std::sort(factors.begin(), factors.end(), chain_key_less); }

bool is_multichain(std::span<const Minor> sorted_factors) {
  for (std::size_t i = 1; i < sorted_factors.size(); ++i)
    if (!leq(sorted_factors[i - 1], sorted_factors[i])) return false;
  return true;
}

StandardMonomial::StandardMonomial(std::vector<Minor> factors) : factors_(std::move(factors)) {
  sort_chain_order(factors_);
  if (!is_multichain(factors_)) throw std::invalid_argument("factors do not form a chain in the minor lattice");
}

int StandardMonomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.size();
  return d;
}

std::string StandardMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) out += f.to_string();
  return out;
}

namespace {

struct ChainWalker {
  const MinorPoset& p;
  const std::function<void(std::span<const std::size_t>)>& visit;
  const std::function<bool(std::size_t)>& allowed;
  std::vector<std::size_t> chain;

  void extend(std::span<const std::size_t> candidates, int remaining) {
    if (remaining == 0) {
      visit(chain);
      return;
    }
    for (std::size_t j : candidates) {
      if (p[j].size() > remaining) continue;
      if (allowed && !allowed(j)) continue;
      chain.push_back(j);
      extend(p.upper_set(j), remaining - p[j].size());
      chain.pop_back();
    }
  }
};

}  // namespace

void for_each_standard_monomial(const MinorPoset& p, int d, const std::function<void(std::span<const std::size_t>)>& visit,
                                const std::function<bool(std::size_t)>& allowed) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<std::size_t> all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  ChainWalker walker{p, visit, allowed, {}};
  walker.extend(all, d);
}

mpz_class count_standard_monomials(const MinorPoset& p, int d, const std::function<bool(std::size_t)>& allowed) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  const std::size_t N = p.size();
  // ways[i][r]: multichains of degree r whose elements all lie above element i
  std::vector<std::vector<mpz_class>> ways(N, std::vector<mpz_class>(std::size_t(d) + 1, 0));
  for (std::size_t i = N; i-- > 0;) {
    ways[i][0] = 1;
    for (int r = 1; r <= d; ++r)
      for (std::size_t j : p.upper_set(i)) {
        const int u = p[j].size();
        if (u > r || (allowed && !allowed(j))) continue;
        ways[i][r] += ways[j][r - u];
      }
  }
  if (d == 0) return 1;
  mpz_class total = 0;
  for (std::size_t j = 0; j < N; ++j) {
    const int u = p[j].size();
    if (u > d || (allowed && !allowed(j))) continue;
    total += ways[j][d - u];
  }
  return total;
}

std::vector<StandardMonomial> standard_monomials(int m, int n, int d) {
  MinorPoset p(m, n);
  std::vector<StandardMonomial> out;
  for_each_standard_monomial(p, d, [&](std::span<const std::size_t> chain) {
    std::vector<Minor> factors;
    factors.reserve(chain.size());
    for (auto i : chain) factors.push_back(p[i]);
    out.emplace_back(std::move(factors));
  });
  return out;
}

Partition shape_of(const StandardMonomial& v) {
  std::vector<int> sizes;
  for (const auto& f : v.factors()) sizes.push_back(f.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return transpose(Partition(std::move(sizes)));
}

std::map<Partition, mpz_class> count_by_shape(int m, int n, int d) {
  MinorPoset p(m, n);
  std::map<Partition, mpz_class> out;
  for_each_standard_monomial(p, d, [&](std::span<const std::size_t> chain) {
    std::vector<int> sizes;
    for (auto i : chain) sizes.push_back(p[i].size());
    out[transpose(Partition(std::move(sizes)))] += 1;
  });
  return out;
}

}  // namespace detinv
