#include "detideal/ideal.hpp"

namespace detideal {

IdealGens<PrimeField> reduce_mod_prime(const IdealGens<RationalField>& gens, const PrimeField& field) {
  IdealGens<PrimeField> out(gens.vars(), field);
  for (const auto& g : gens.generators()) out.add(reduce_mod_prime(g, field));
  return out;
}

std::size_t modular_rank(const IdealGens<RationalField>& gens, unsigned k, const PrimeField& field) {
  return graded_component(reduce_mod_prime(gens, field), k).rank();
}

unsigned min_valuation(const IdealGens<RationalField>& gens) {
  if (gens.empty()) throw std::invalid_argument("valuation of the zero ideal");
  if (gens.vars()->size() != 1) throw std::invalid_argument("valuation needs a single-variable ring");
  unsigned best = ~0U;
  for (const auto& g : gens.generators()) best = std::min(best, g.min_degree());
  return best;
}

QMatrix invert(const QMatrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  QMatrix m = a;
  QMatrix inv(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

GlSubstitution::GlSubstitution(const QPolyMatrix& generic, const QMatrix& a, const QMatrix& b) {
  const std::size_t m = generic.rows(), n = generic.cols();
  if (m == 0 || n == 0) throw std::invalid_argument("empty generic matrix");
  if (a.rows() != m || a.cols() != m || b.rows() != n || b.cols() != n)
    throw std::invalid_argument("GL substitution needs A m x m and B n x n");
  if (sgn(rational_determinant(a)) == 0) throw std::domain_error("A is singular");
  const QMatrix b_inv = invert(b);  // throws when B is singular

  vars_ = generic(0, 0).vars();
  for (std::size_t v = 0; v < vars_->size(); ++v) var_images_.push_back(QPolynomial::variable(vars_, v));

  std::vector<std::size_t> index(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QPolynomial& x = generic(i, j);
      if (x.size() != 1 || x.leading_monomial().degree() != 1 || x.leading_coeff() != 1)
        throw std::invalid_argument("generic matrix entries must be distinct variables");
      const auto& e = x.leading_monomial().exponents();
      index[i * n + j] = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QPolynomial img(vars_);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational c = a(i, k) * b_inv(l, j);
          if (sgn(c) != 0) img.add_scaled(generic(k, l), c);
        }
      var_images_[index[i * n + j]] = std::move(img);
    }
}

const QPolynomial& GlSubstitution::image_of(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  QPolynomial img(vars_);
  if (m.is_one()) {
    img = QPolynomial::constant(vars_, 1);
  } else {
    std::size_t v = 0;
    while (m[v] == 0) ++v;
    const Monomial rest = m.divide(Monomial::variable(m.size(), v));
    img = var_images_[v] * image_of(rest);
  }
  return cache_.emplace(m, std::move(img)).first->second;
}

QPolynomial GlSubstitution::apply(const QPolynomial& p) {
  if (!same_table(p.vars(), vars_)) throw std::invalid_argument("polynomial over a different variable table");
  QPolynomial out(vars_);
  for (const auto& t : p.terms()) out.add_scaled(image_of(t.monomial), t.coeff);
  return out;
}

QPolynomial apply_gl_substitution(const QPolynomial& p, const QPolyMatrix& generic, const QMatrix& a, const QMatrix& b) {
  GlSubstitution sub(generic, a, b);
  return sub.apply(p);
}

}  // namespace detideal
