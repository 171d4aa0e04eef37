#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "cliff/error.hpp"
#include "cliff/scalar.hpp"

namespace cliff {

// Small dense row-major matrix over one scalar backend.
template <CliffordScalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw DomainError("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_from_int<S>(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<S>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }

  friend std::vector<S> operator*(const Matrix& a, const std::vector<S>& v) {
    if (a.cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
    std::vector<S> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  S trace() const {
    S t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix conjugate() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = ScalarTraits<S>::conj(x);
    return r;
  }

  Matrix adjoint() const { return conjugate().transpose(); }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <CliffordScalar S>
double max_magnitude(const Matrix<S>& m) {
  double r = 0.0;
  for (const auto& x : m.data()) r = std::max(r, ScalarTraits<S>::magnitude(x));
  return r;
}

template <CliffordScalar S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b, double tol = kDefaultTolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return a.rows() == b.rows() && a.cols() == b.cols() && max_magnitude(a - b) <= tol;
  }
}

namespace detail {

template <CliffordScalar S>
bool pivot_is_zero(const S& s, double tol) {
  return ScalarTraits<S>::is_zero(s, tol);
}

// Row-reduces in place to reduced echelon form; returns pivot columns.
template <CliffordScalar S>
std::vector<std::size_t> row_reduce(Matrix<S>& m, double tol) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    double best_mag = 0.0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (pivot_is_zero(m(r, col), tol)) continue;
      if constexpr (ScalarTraits<S>::exact) {
        best = r;
        break;
      } else {
        double mag = ScalarTraits<S>::magnitude(m(r, col));
        if (mag > best_mag) {
          best_mag = mag;
          best = r;
        }
      }
    }
    if (best == m.rows()) continue;
    if (best != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    }
    S inv = scalar_from_int<S>(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == S{}) continue;
      S f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <CliffordScalar S>
std::size_t rank(Matrix<S> m, double tol = kDefaultTolerance) {
  return detail::row_reduce(m, tol).size();
}

// Basis of {v : m v = 0}, one column vector per entry.
template <CliffordScalar S>
std::vector<std::vector<S>> nullspace(Matrix<S> m, double tol = kDefaultTolerance) {
  auto pivots = detail::row_reduce(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(m.cols());
    v[free] = scalar_from_int<S>(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves m x = b for square nonsingular m.
template <CliffordScalar S>
std::optional<std::vector<S>> solve(const Matrix<S>& m, const std::vector<S>& b, double tol = kDefaultTolerance) {
  if (m.rows() != m.cols() || b.size() != m.rows()) throw DomainError("solve expects a square system");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = detail::row_reduce(aug, tol);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  std::vector<S> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

}  // namespace cliff
