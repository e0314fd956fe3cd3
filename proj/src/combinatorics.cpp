#include "detinv/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace detinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

DominantWeight::DominantWeight(std::vector<long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("dominant weight needs rank >= 1");
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] > entries_[i - 1]) throw std::invalid_argument("weight is not dominant (entries must weakly decrease)");
}

DominantWeight DominantWeight::from_partition(const Partition& p, int rank) {
  if (p.length() > rank) throw std::invalid_argument("partition " + p.to_string() + " has more parts than the rank");
  std::vector<long> e(std::size_t(rank), 0);
  for (int i = 0; i < p.length(); ++i) e[i] = p[i];
  return DominantWeight(std::move(e));
}

namespace {

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // the remaining slots can hold at most slots * part
    if (long(part) * slots < remaining) break;
    cur.push_back(part);
    partitions_rec(remaining - part, part, slots - 1, cur, out);
    cur.pop_back();
  }
}

// Counts fillings column by column. A column is a strictly increasing
// sequence; consecutive columns must be weakly increasing along rows.
class TableauCounter {
 public:
  TableauCounter(std::vector<int> column_lengths, int n) : lengths_(std::move(column_lengths)), n_(n) {}

  mpz_class count() { return count_from(0, {}); }

 private:
  mpz_class count_from(std::size_t col, const std::vector<int>& prev) {
    if (col == lengths_.size()) return 1;
    auto key = std::make_pair(col, prev);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    mpz_class total = 0;
    std::vector<int> column(std::size_t(lengths_[col]));
    fill(col, 0, prev, column, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void fill(std::size_t col, std::size_t row, const std::vector<int>& prev, std::vector<int>& column, mpz_class& total) {
    const std::size_t len = column.size();
    if (row == len) {
      total += count_from(col + 1, column);
      return;
    }
    int lo = row == 0 ? 1 : column[row - 1] + 1;
    if (row < prev.size()) lo = std::max(lo, prev[row]);
    const int hi = n_ - int(len - 1 - row);
    for (int v = lo; v <= hi; ++v) {
      column[row] = v;
      fill(col, row + 1, prev, column, total);
    }
  }

  std::vector<int> lengths_;
  int n_;
  std::map<std::pair<std::size_t, std::vector<int>>, mpz_class> memo_;
};

}  // namespace

std::vector<Partition> partitions_of(int d, int max_len) {
  if (d < 0 || max_len < 0) throw std::invalid_argument("partitions_of needs nonnegative arguments");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(d, d, max_len, cur, out);
  return out;
}

Partition transpose(const Partition& p) {
  std::vector<int> t(p.empty() ? 0 : std::size_t(p[0]), 0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int part : p.parts())
      if (part >= int(i) + 1) ++t[i];
  return Partition(std::move(t));
}

mpz_class ssyt_count(const Partition& shape, int n) {
  if (n < 0) throw std::invalid_argument("ssyt_count needs n >= 0");
  if (shape.length() > n) return 0;
  if (shape.empty()) return 1;
  return TableauCounter(transpose(shape).parts(), n).count();
}

mpz_class weyl_dim(const DominantWeight& w) {
  // Twisting by a power of the determinant does not change the dimension,
  // so shift the last entry to zero and count tableaux.
  const long last = w.entries().back();
  std::vector<int> parts;
  parts.reserve(w.entries().size());
  for (long e : w.entries()) parts.push_back(int(e - last));
  return ssyt_count(Partition(std::move(parts)), w.rank());
}

mpz_class cauchy_dim(int m, int n, int d) {
  if (m < 1 || n < 1) throw std::invalid_argument("cauchy_dim needs m, n >= 1");
  mpz_class total = 0;
  for (const auto& lambda : partitions_of(d, std::min(m, n))) total += ssyt_count(lambda, m) * ssyt_count(lambda, n);
  return total;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace detinv
