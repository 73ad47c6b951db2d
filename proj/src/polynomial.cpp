#include "detideal/polynomial.hpp"

#include "detideal/matrix.hpp"

namespace detideal {

FpPolynomial reduce_mod_prime(const QPolynomial& p, const PrimeField& field) {
  std::vector<FpPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto c = field.from_rational(t.coeff);
    if (c != 0) terms.push_back({t.monomial, c});
  }
  return FpPolynomial::from_terms(p.vars(), field, std::move(terms));
}

FpPolyMatrix reduce_mod_prime(const QPolyMatrix& a, const PrimeField& field) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  FpPolyMatrix out = zero_matrix(a(0, 0).vars(), field, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = reduce_mod_prime(a(i, j), field);
  return out;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  QMatrix c(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

}  // namespace detideal
