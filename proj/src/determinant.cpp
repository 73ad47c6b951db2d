#include "detideal/determinant.hpp"

#include <utility>

namespace detideal {

Integer bareiss_determinant(ZMatrix a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

std::size_t integer_rank(ZMatrix a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != rank)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(p, j));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Integer piv = a(rank, col), f = a(i, col);
      Integer content = 0;
      for (std::size_t j = col; j < a.cols(); ++j) {
        a(i, j) = piv * a(i, j) - f * a(rank, j);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a(i, j).get_mpz_t());
      }
      if (content > 1)
        for (std::size_t j = col; j < a.cols(); ++j)
          mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), content.get_mpz_t());
    }
    ++rank;
  }
  return rank;
}

ZMatrix clear_denominators(const QMatrix& a, Rational& scale) {
  ZMatrix out(a.rows(), a.cols(), Integer(0));
  scale = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
    scale *= l;
  }
  return out;
}

Rational rational_determinant(const QMatrix& a) {
  Rational scale;
  ZMatrix z = clear_denominators(a, scale);
  Rational det(bareiss_determinant(std::move(z)));
  det /= scale;
  return det;
}

std::size_t rational_rank(const QMatrix& a) {
  Rational scale;
  return integer_rank(clear_denominators(a, scale));
}

PrimeField::Element prime_determinant(Matrix<PrimeField::Element> a, const PrimeField& field) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  PrimeField::Element det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = field.neg(det);
    }
    det = field.mul(det, a(k, k));
    const auto inv = field.inv(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const auto f = field.mul(a(i, k), inv);
      for (std::size_t j = k; j < n; ++j) field.sub_mul(a(i, j), f, a(k, j));
    }
  }
  return det;
}

std::size_t prime_rank(Matrix<PrimeField::Element> a, const PrimeField& field) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != rank)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(p, j));
    const auto inv = field.inv(a(rank, col));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const auto f = field.mul(a(i, col), inv);
      for (std::size_t j = col; j < a.cols(); ++j) field.sub_mul(a(i, j), f, a(rank, j));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detideal
