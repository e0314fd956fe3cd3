#include "detinv/gamma.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace detinv {
namespace {

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

char to_char(BlockType t) {
  switch (t) {
    case BlockType::G: return 'G';
    case BlockType::S: return 'S';
    case BlockType::T: return 'T';
  }
  return '?';
}

int BlockSpec::epsilon() const {
  for (int l = 1; l <= s(); ++l)
    if (type(l) == BlockType::G) return l;
  return s() + 1;
}

int BlockSpec::block_of(int i) const {
  for (int l = 1; l <= s(); ++l)
    if (block_start(l) < i && i <= block_end(l)) return l;
  throw std::out_of_range("row position " + std::to_string(i) + " is outside every block");
}

BlockSpec BlockSpec::parse(int m, std::string_view a_list, std::string_view tag_list) {
  BlockSpec b;
  b.m = m;
  for (const auto& tok : split_commas(a_list)) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("block boundaries must be nonnegative integers, got '" + tok + "'");
    b.a.push_back(std::stoi(tok));
  }
  for (const auto& tok : split_commas(tag_list)) {
    if (tok == "G" || tok == "g") b.types.push_back(BlockType::G);
    else if (tok == "S" || tok == "s") b.types.push_back(BlockType::S);
    else if (tok == "T" || tok == "t") b.types.push_back(BlockType::T);
    else throw std::invalid_argument("block tags must be G, S or T, got '" + tok + "'");
  }
  validate_blocks(b);
  return b;
}

std::string BlockSpec::to_string() const {
  std::string out = "m=" + std::to_string(m) + " a=";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  out += " tags=";
  for (std::size_t i = 0; i < types.size(); ++i) out += std::string(i ? "," : "") + to_char(types[i]);
  return out;
}

void validate_blocks(const BlockSpec& b) {
  if (b.m < 1) throw std::invalid_argument("block spec needs m >= 1");
  if (b.a.size() < 2) throw std::invalid_argument("block boundaries need at least a_0 and a_1");
  if (b.a.front() != 0) throw std::invalid_argument("block boundaries must start at 0");
  for (std::size_t i = 1; i < b.a.size(); ++i)
    if (b.a[i] <= b.a[i - 1]) throw std::invalid_argument("block boundaries must be strictly increasing");
  if (b.a.back() != b.m)
    throw std::invalid_argument("last block boundary must equal m (" + std::to_string(b.a.back()) + " != " + std::to_string(b.m) + ")");
  if (b.types.size() != b.a.size() - 1)
    throw std::invalid_argument("need one tag per block: " + std::to_string(b.a.size() - 1) + " blocks, " +
                                std::to_string(b.types.size()) + " tags");
}

bool in_gamma(const Minor& x, const BlockSpec& b) {
  const int u = x.size();
  for (int l = 1; l < b.epsilon(); ++l) {
    const int lo = b.block_start(l), hi = b.block_end(l);
    if (b.type(l) == BlockType::S) {
      if (u != hi) continue;
      bool initial = true;
      for (int t = 0; t < u; ++t) initial = initial && x.rows[t] == t + 1;
      if (initial) return true;
    } else if (b.type(l) == BlockType::T) {
      if (u <= lo || u > hi) continue;
      if (x.rows.back() > hi) continue;
      bool fixed = true;
      for (int t = 0; t < lo; ++t) fixed = fixed && x.rows[t] == t + 1;
      if (fixed) return true;
    }
  }
  return false;
}

std::vector<Minor> gamma_generators(const BlockSpec& b, int n) {
  validate_blocks(b);
  MinorPoset p(b.m, n);
  std::vector<Minor> out;
  for (const auto& x : p.elements())
    if (in_gamma(x, b)) out.push_back(x);
  return out;
}

bool is_gamma_standard(const StandardMonomial& v, const BlockSpec& b) {
  return std::all_of(v.factors().begin(), v.factors().end(), [&](const Minor& x) { return in_gamma(x, b); });
}

bool satisfies_block_condition(const StandardMonomial& v, const BlockSpec& b) {
  if (!to_theta(shape_of(v), b)) return false;
  for (const auto& x : v.factors())
    for (int i = 1; i <= x.size(); ++i) {
      if (i > b.m) return false;
      const int l = b.block_of(i);
      const int c = x.rows[i - 1];
      if (c <= b.block_start(l) || c > b.block_end(l)) return false;
    }
  return true;
}

std::optional<ThetaWeight> to_theta(const Partition& lambda, const BlockSpec& b) {
  if (lambda.length() > b.m) return std::nullopt;
  std::vector<DominantWeight> slices;
  for (int l = 1; l <= b.s(); ++l) {
    std::vector<long> slice;
    for (int i = b.block_start(l); i < b.block_end(l); ++i) slice.push_back(lambda[std::size_t(i)]);
    const bool all_zero = std::all_of(slice.begin(), slice.end(), [](long e) { return e == 0; });
    const bool constant = std::all_of(slice.begin(), slice.end(), [&](long e) { return e == slice.front(); });
    if (b.type(l) == BlockType::G && !all_zero) return std::nullopt;
    if (b.type(l) == BlockType::S && !constant) return std::nullopt;
    slices.emplace_back(std::move(slice));
  }
  return ThetaWeight{DominantWeight::from_partition(lambda, b.m), std::move(slices)};
}

mpz_class hilbert_gamma(const BlockSpec& b, int n, int d) {
  validate_blocks(b);
  MinorPoset p(b.m, n);
  std::vector<bool> member(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) member[i] = in_gamma(p[i], b);
  return count_standard_monomials(p, d, [&](std::size_t i) { return bool(member[i]); });
}

std::vector<Partition> theta_partitions(const BlockSpec& b, int n, int d) {
  validate_blocks(b);
  std::vector<Partition> out;
  for (auto& lambda : partitions_of(d, std::min(b.m, n)))
    if (to_theta(lambda, b)) out.push_back(std::move(lambda));
  return out;
}

mpz_class hilbert_theta(const BlockSpec& b, int n, int d) {
  mpz_class total = 0;
  for (const auto& lambda : theta_partitions(b, n, d)) {
    const auto theta = to_theta(lambda, b);
    mpz_class term = ssyt_count(lambda, n);
    for (const auto& slice : theta->slices) term *= weyl_dim(slice);
    total += term;
  }
  return total;
}

bool IdentityReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.equal; });
}

IdentityReport verify_main_identity(const BlockSpec& b, int n, int d_max) {
  validate_blocks(b);
  IdentityReport report{b, n, {}};
  for (int d = 0; d <= d_max; ++d) {
    IdentityRow row{d, hilbert_gamma(b, n, d), hilbert_theta(b, n, d), false};
    row.equal = row.gamma == row.theta;
    report.rows.push_back(std::move(row));
  }
  return report;
}

mpz_class hilbert_determinantal(int m, int n, int t, int d) {
  if (m < 1 || n < 1) throw std::invalid_argument("hilbert_determinantal needs m, n >= 1");
  if (t < 0 || t > std::min(m, n)) throw std::invalid_argument("rank bound t must satisfy 0 <= t <= min(m,n)");
  mpz_class total = 0;
  for (const auto& lambda : partitions_of(d, t)) total += ssyt_count(lambda, m) * ssyt_count(lambda, n);
  return total;
}

namespace {

void compositions(int remaining, int max_parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  if (int(cur.size()) == max_parts) return;
  for (int part = 1; part <= remaining; ++part) {
    cur.push_back(part);
    compositions(remaining - part, max_parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BlockSpec> all_block_specs(int m, int max_blocks) {
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(m, max_blocks, cur, comps);
  std::vector<BlockSpec> out;
  for (const auto& comp : comps) {
    BlockSpec base;
    base.m = m;
    base.a.push_back(0);
    for (int part : comp) base.a.push_back(base.a.back() + part);
    const int s = int(comp.size());
    int combos = 1;
    for (int i = 0; i < s; ++i) combos *= 3;
    for (int code = 0; code < combos; ++code) {
      BlockSpec b = base;
      int c = code;
      for (int i = 0; i < s; ++i) {
        b.types.push_back(static_cast<BlockType>(c % 3));
        c /= 3;
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace detinv
