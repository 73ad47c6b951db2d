#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "detideal/polynomial.hpp"

namespace detideal {

// Dense row-major grid.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class F>
using PolyMatrix = Matrix<Polynomial<F>>;
using QPolyMatrix = PolyMatrix<RationalField>;
using FpPolyMatrix = PolyMatrix<PrimeField>;
using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

template <class F>
PolyMatrix<F> zero_matrix(const VarTablePtr& vars, const F& field, std::size_t rows, std::size_t cols) {
  return PolyMatrix<F>(rows, cols, Polynomial<F>(vars, field));
}

template <class F>
PolyMatrix<F> identity_matrix(const VarTablePtr& vars, const F& field, std::size_t n) {
  PolyMatrix<F> m = zero_matrix(vars, field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial<F>::constant(vars, field, field.one());
  return m;
}

template <class F>
PolyMatrix<F> multiply(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) throw std::invalid_argument("empty matrix product");
  PolyMatrix<F> c = zero_matrix(a(0, 0).vars(), a(0, 0).field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class F>
bool is_numeric(const PolyMatrix<F>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_constant()) return false;
  return true;
}

// Constant entries of a numeric matrix; throws on a non-constant entry.
template <class F>
Matrix<typename F::Element> constant_entries(const PolyMatrix<F>& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  Matrix<typename F::Element> out(a.rows(), a.cols(), a(0, 0).field().zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_constant()) throw std::domain_error("matrix entry is not constant");
      out(i, j) = a(i, j).constant_value();
    }
  return out;
}

template <class F>
PolyMatrix<F> constant_matrix(const VarTablePtr& vars, const F& field, const Matrix<typename F::Element>& a) {
  PolyMatrix<F> out = zero_matrix(vars, field, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Polynomial<F>::constant(vars, field, a(i, j));
  return out;
}

template <class F>
PolyMatrix<F> submatrix(const PolyMatrix<F>& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  PolyMatrix<F> out(rows.size(), cols.size(), a(0, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a.at(rows[i], cols[j]);
  return out;
}

FpPolyMatrix reduce_mod_prime(const QPolyMatrix& a, const PrimeField& field);

QMatrix multiply(const QMatrix& a, const QMatrix& b);

}  // namespace detideal
