#pragma once

// Dense row-major matrix over an exact scalar type. Only the operations the
// library actually needs; no expression templates, no views.

#include "perfrel/rational.hpp"

#include <initializer_list>
#include <vector>

namespace perfrel {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, T init = T(0))
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, init) {
    if (rows < 0 || cols < 0) throw MathError("Matrix: negative dimension");
  }
  Matrix(int rows, int cols, std::initializer_list<T> entries)
      : rows_(rows), cols_(cols), a_(entries) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
      throw MathError("Matrix: entry count does not match dimensions");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  std::vector<T> col(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<T> row(int i) const {
    std::vector<T> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  void set_col(int j, const std::vector<T>& c) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  void swap_rows(int i, int k) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(int j, int l) {
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, l));
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

using RatMat = Matrix<Rat>;
using IntMat = Matrix<Int>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw MathError("Matrix product: shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw MathError("Matrix-vector product: shape mismatch");
  std::vector<T> y(a.rows(), T(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

// Matrix whose columns are the given vectors.
template <typename T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& cols) {
  if (cols.empty()) return Matrix<T>();
  Matrix<T> m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols[0].size())
      throw MathError("from_columns: ragged column lengths");
    for (size_t i = 0; i < cols[j].size(); ++i)
      m(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

inline RatMat to_rational(const IntMat& a) {
  RatMat m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
  return m;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace perfrel
