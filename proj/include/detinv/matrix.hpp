#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "detinv/field.hpp"

namespace detinv {

/// Dense row-major matrix over a field.
template <class Field>
class Matrix {
 public:
  using Element = typename Field::Element;

  explicit Matrix(Field field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  /// Builds a matrix from equal-length rows.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<Element>>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const Element> r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Element& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
      }
    return out;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Reduced row-echelon form: nonzero rows only, pivots equal to one.
template <class Field>
struct Echelon {
  Matrix<Field> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

// Gaussian elimination on the first `active_cols` columns; trailing columns
// ride along (used for transform tracking). Returns pivot columns and leaves
// the first `rank` rows in reduced form.
template <class Field>
std::vector<std::size_t> eliminate(Matrix<Field>& m, std::size_t active_cols) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < active_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const auto piv = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.div(m(i, c), piv);
      auto dst = m.row(i);
      auto src = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!f.is_zero(src[j])) f.sub_mul(dst[j], factor, src[j]);
      f.normalize_row(dst);
    }
    pivots.push_back(c);
    ++r;
  }
  // Back substitution with unit pivots.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    const auto inv = f.inv(m(k, c));
    for (auto& e : m.row(k))
      if (!f.is_zero(e)) e = f.mul(e, inv);
    for (std::size_t i = 0; i < k; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      auto dst = m.row(i);
      auto src = m.row(k);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!f.is_zero(src[j])) f.sub_mul(dst[j], factor, src[j]);
    }
  }
  return pivots;
}

template <class Field>
Matrix<Field> take_rows(const Matrix<Field>& m, std::size_t count, std::size_t col_begin, std::size_t col_end) {
  Matrix<Field> out(m.field(), count, col_end - col_begin);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = col_begin; j < col_end; ++j) out(i, j - col_begin) = m(i, j);
  return out;
}

}  // namespace detail

template <class Field>
Echelon<Field> rref(Matrix<Field> m) {
  auto pivots = detail::eliminate(m, m.cols());
  auto reduced = detail::take_rows(m, pivots.size(), 0, m.cols());
  return {std::move(reduced), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  Matrix<Field> copy = m;
  return detail::eliminate(copy, copy.cols()).size();
}

/// Basis of {x : m x = 0}, one basis vector per free column.
template <class Field>
std::vector<std::vector<typename Field::Element>> nullspace(const Matrix<Field>& m) {
  const Field& f = m.field();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename Field::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = f.neg(e.reduced(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {y : y m = 0}.
template <class Field>
std::vector<std::vector<typename Field::Element>> left_nullspace(const Matrix<Field>& m) {
  return nullspace(m.transpose());
}

/// Row space of a matrix prepared for repeated membership queries. When
/// built with coordinates, it also records how each reduced row combines the
/// original rows so that `coordinates` can express a target in them.
template <class Field>
class RowSpan {
 public:
  using Element = typename Field::Element;

  explicit RowSpan(const Matrix<Field>& rows, bool track_coordinates = false)
      : field_(rows.field()), cols_(rows.cols()), original_rows_(rows.rows()),
        reduced_(rows.field()), transform_(rows.field()) {
    if (!track_coordinates) {
      auto e = rref(rows);
      reduced_ = std::move(e.reduced);
      pivots_ = std::move(e.pivots);
      return;
    }
    Matrix<Field> aug(field_, rows.rows(), cols_ + rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = rows(i, j);
      aug(i, cols_ + i) = field_.one();
    }
    pivots_ = detail::eliminate(aug, cols_);
    reduced_ = detail::take_rows(aug, pivots_.size(), 0, cols_);
    transform_ = detail::take_rows(aug, pivots_.size(), cols_, cols_ + rows.rows());
    tracked_ = true;
  }

  std::size_t dimension() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const Matrix<Field>& reduced() const { return reduced_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v modulo the span; zero iff v lies in the span. The residue
  /// vanishes on every pivot column, so it is a canonical representative.
  std::vector<Element> reduce(std::vector<Element> v) const {
    check_length(v);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const auto c = v[pivots_[k]];
      if (field_.is_zero(c)) continue;
      auto src = reduced_.row(k);
      for (std::size_t j = 0; j < cols_; ++j)
        if (!field_.is_zero(src[j])) field_.sub_mul(v[j], c, src[j]);
    }
    return v;
  }

  bool contains(const std::vector<Element>& v) const {
    for (const auto& e : reduce(v))
      if (!field_.is_zero(e)) return false;
    return true;
  }

  /// Coefficients c with sum_i c_i * row_i = target, or nullopt when the
  /// target is outside the span. Requires coordinate tracking.
  std::optional<std::vector<Element>> coordinates(const std::vector<Element>& target) const {
    if (!tracked_) throw std::logic_error("RowSpan built without coordinate tracking");
    check_length(target);
    if (!contains(target)) return std::nullopt;
    std::vector<Element> out(original_rows_, field_.zero());
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const auto c = target[pivots_[k]];
      if (field_.is_zero(c)) continue;
      for (std::size_t i = 0; i < original_rows_; ++i)
        if (!field_.is_zero(transform_(k, i))) out[i] = field_.add(out[i], field_.mul(c, transform_(k, i)));
    }
    return out;
  }

 private:
  void check_length(const std::vector<Element>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match span");
  }

  Field field_;
  std::size_t cols_;
  std::size_t original_rows_;
  Matrix<Field> reduced_;
  Matrix<Field> transform_;
  std::vector<std::size_t> pivots_;
  bool tracked_ = false;
};

/// Exact coordinates of `target` in the row span of `span_rows`, or nullopt.
template <class Field>
std::optional<std::vector<typename Field::Element>> solve_membership(
    const std::vector<typename Field::Element>& target, const Matrix<Field>& span_rows) {
  return RowSpan<Field>(span_rows, true).coordinates(target);
}

}  // namespace detinv
