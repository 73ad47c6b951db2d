#pragma once

// Matrices of symmetric, exterior and tensor powers in explicit bases, and
// the standard test matrices (generic, diagonal, t-adic diagonal).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "detideal/combinatorics.hpp"
#include "detideal/determinant.hpp"
#include "detideal/matrix.hpp"

namespace detideal {

enum class PowerKind { symmetric, exterior };

// Basis of S^d or Lambda^d of an n-dimensional free module. Symmetric entries
// are exponent vectors |alpha| = d in descending lex order; exterior entries
// are increasing d-tuples in lex order.
struct PowerBasisIndex {
  PowerKind kind;
  unsigned power;
  std::size_t dimension;
  std::vector<std::vector<unsigned>> entries;

  std::size_t size() const { return entries.size(); }
};

PowerBasisIndex symmetric_basis(std::size_t n, unsigned d);
PowerBasisIndex exterior_basis(std::size_t n, unsigned d);

struct PowerConstants {
  std::uint64_t s;           // C(n+d-1, d-1), exponent for S^d
  std::uint64_t e;           // C(n-1, d-1), exponent for Lambda^d
  std::uint64_t rank_bound;  // C(r+d-1, d), rank of S^d of a rank-r map
};

PowerConstants power_constants(std::uint64_t n, std::uint64_t d, std::uint64_t r);

struct MatrixFamily {
  std::string tag;
  std::size_t rows;
  std::size_t cols;
};

// Variables tag[i][j] (1-based) for each family, families in order, row-major.
VarTablePtr generic_table(const std::vector<MatrixFamily>& families);
std::string generic_name(const std::string& tag, std::size_t i, std::size_t j);

// rows x cols matrix of the family's indeterminates; the table must hold them.
QPolyMatrix generic_matrix(const VarTablePtr& vars, std::size_t rows, std::size_t cols, const std::string& tag);
// Same, over a fresh table containing only this family.
QPolyMatrix generic_matrix(std::size_t rows, std::size_t cols, const std::string& tag);

// diag(Y1..Yk) over a fresh table Y1..Yk.
QPolyMatrix diagonal_indeterminate_matrix(std::size_t k, const std::string& tag = "Y");

// n x m matrix (n = exponents.size() <= m) with t^{a_i} at (i,i), over the table {t}.
QPolyMatrix dvr_diagonal(const std::vector<unsigned>& exponents, std::size_t m);

// Rank over the field of a matrix with constant entries.
template <class F>
std::size_t numeric_rank(const PolyMatrix<F>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  auto values = constant_entries(a);
  if constexpr (std::is_same_v<F, RationalField>)
    return rational_rank(values);
  else
    return prime_rank(values, a(0, 0).field());
}

// S^d(A) for A : R^m -> R^n given as an n x m matrix. Column alpha holds the
// expansion of prod_j (column j of A)^{alpha_j} in the monomial basis.
template <class F>
PolyMatrix<F> symmetric_power_matrix(const PolyMatrix<F>& a, unsigned d) {
  if (d == 0) throw std::invalid_argument("symmetric power needs d >= 1");
  if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("empty matrix");
  const std::size_t n = a.rows(), m = a.cols();
  const VarTablePtr& vars = a(0, 0).vars();
  const F& field = a(0, 0).field();
  const PowerBasisIndex target = symmetric_basis(n, d);
  const PowerBasisIndex source = symmetric_basis(m, d);
  std::map<std::vector<unsigned>, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target.entries[i], i);

  PolyMatrix<F> out = zero_matrix(vars, field, target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& alpha = source.entries[col];
    // Element of S^k(R^n) as exponent vector -> coefficient.
    std::map<std::vector<unsigned>, Polynomial<F>> acc;
    acc.emplace(std::vector<unsigned>(n, 0), Polynomial<F>::constant(vars, field, field.one()));
    for (std::size_t j = 0; j < m; ++j) {
      for (unsigned rep = 0; rep < alpha[j]; ++rep) {
        std::map<std::vector<unsigned>, Polynomial<F>> next;
        for (const auto& [beta, coeff] : acc) {
          for (std::size_t i = 0; i < n; ++i) {
            if (a(i, j).is_zero()) continue;
            auto gamma = beta;
            ++gamma[i];
            auto [it, inserted] = next.try_emplace(std::move(gamma), vars, field);
            it->second += coeff * a(i, j);
          }
        }
        acc = std::move(next);
      }
    }
    for (auto& [beta, coeff] : acc) out(row_of.at(beta), col) = std::move(coeff);
  }
  return out;
}

// The d-th compound matrix: minors on (row d-subset, column d-subset).
template <class F>
PolyMatrix<F> exterior_power_matrix(const PolyMatrix<F>& a, unsigned d) {
  if (d == 0 || d > std::min(a.rows(), a.cols())) throw std::invalid_argument("exterior power out of range");
  return minor_grid(a, d);
}

// Kronecker product: entry (i*q + k, j*p + l) is A(i,j) * B(k,l).
template <class F>
PolyMatrix<F> tensor_product_matrix(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
  if (a.rows() == 0 || a.cols() == 0 || b.rows() == 0 || b.cols() == 0) throw std::invalid_argument("empty matrix");
  const std::size_t q = b.rows(), p = b.cols();
  PolyMatrix<F> out = zero_matrix(a(0, 0).vars(), a(0, 0).field(), a.rows() * q, a.cols() * p);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t l = 0; l < p; ++l)
          if (!b(k, l).is_zero()) out(i * q + k, j * p + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace detideal
