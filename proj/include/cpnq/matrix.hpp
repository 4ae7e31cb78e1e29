#pragma once

// Dense exact matrices over Scalar, sized for the small spaces appearing
// here (N^2 x N^2 braidings and 2^N x 2^N Clifford operators).

#include <stdexcept>
#include <vector>

#include "cpnq/scalar.hpp"

namespace cpnq {

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Matrix scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Scalar& x = at(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) {
          const Scalar& y = o.at(k, j);
          if (!y.is_zero()) r.at(i, j) += x * y;
        }
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Exact evaluation of a Scalar at rational points v = v0, s = s0.
inline mpq_class scalar_eval2(const Scalar& x, const mpq_class& v0,
                              const mpq_class& s0) {
  auto poly_eval = [&](const LaurentPoly& p) {
    mpq_class acc = 0;
    for (const auto& [key, c] : p.coeffs()) {
      mpq_class t = c;
      auto pow = [](mpq_class base, int e) {
        mpq_class r = 1;
        bool inv = e < 0;
        for (int i = 0; i < std::abs(e); ++i) r *= base;
        if (inv) r = 1 / r;
        return r;
      };
      t *= pow(v0, key.first);
      t *= pow(s0, key.second);
      acc += t;
    }
    return acc;
  };
  mpq_class d = poly_eval(x.den());
  if (d == 0) throw PoleError("scalar_eval2: pole at the sample point");
  return poly_eval(x.num()) / d;
}

// Rank over Q of the matrix specialized at generic rational sample points.
// A full rank at a sample is a proof of full rank over the function field;
// for non-maximal results the sample rank is a lower bound.
inline size_t matrix_rank_at(const Matrix& m, const mpq_class& v0,
                             const mpq_class& s0 = 1) {
  std::vector<std::vector<mpq_class>> a(m.rows(),
                                        std::vector<mpq_class>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      a[i][j] = scalar_eval2(m.at(i, j), v0, s0);
  size_t rank = 0;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    mpq_class inv = 1 / a[rank][col];
    for (size_t j = col; j < m.cols(); ++j) a[rank][j] *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cpnq
