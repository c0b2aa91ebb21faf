#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "repknit/error.hpp"

namespace repknit {

using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over the rationals. Dimensions may be zero.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::InternalInconsistency, "exact_linear",
                  "shape mismatch " + std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  Matrix scaled(const Rational& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  std::vector<Rational> column(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  static Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form computed in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(Matrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b; nullopt if inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, m.cols());
  }
  return x;
}

/// Quotient of the coordinate space k^n by a subspace spanned by `relations`.
/// The quotient basis is a subset of the standard basis (the non-pivot
/// coordinates of the reduced relation matrix), so every vector can be
/// reduced to quotient coordinates exactly.
class Quotient {
 public:
  Quotient(std::size_t ambient, const std::vector<std::vector<Rational>>& relations)
      : ambient_(ambient), reduced_(Matrix::from_rows(relations, ambient)) {
    pivots_ = row_reduce(reduced_);
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t c = 0; c < ambient; ++c)
      if (!is_pivot[c]) basis_.push_back(c);
    coordinate_.assign(ambient, -1);
    for (std::size_t i = 0; i < basis_.size(); ++i) coordinate_[basis_[i]] = static_cast<long>(i);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t relation_rank() const { return pivots_.size(); }
  /// Ambient coordinate carried by quotient basis vector `i`.
  std::size_t basis_coordinate(std::size_t i) const { return basis_[i]; }

  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < ambient_; ++c)
        if (reduced_(r, c) != 0) v[c] -= f * reduced_(r, c);
    }
    std::vector<Rational> out(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = v[basis_[i]];
    return out;
  }

 private:
  std::size_t ambient_;
  Matrix reduced_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> basis_;
  std::vector<long> coordinate_;
};

}  // namespace repknit
