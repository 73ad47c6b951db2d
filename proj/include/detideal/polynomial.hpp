#pragma once

// Sparse multivariate polynomials over a coefficient field context.
// Terms are kept sorted by descending graded-lex order with no zero
// coefficients, so equal polynomials have identical term vectors.

#include <algorithm>
#include <concepts>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "detideal/field.hpp"
#include "detideal/monomial.hpp"

namespace detideal {

template <class F>
class Polynomial {
 public:
  using Field = F;
  using Coeff = typename F::Element;

  struct Term {
    Monomial monomial;
    Coeff coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial(VarTablePtr vars, F field) : vars_(std::move(vars)), field_(std::move(field)) {
    if (!vars_) throw std::invalid_argument("null variable table");
  }
  explicit Polynomial(VarTablePtr vars)
    requires std::default_initializable<F>
      : Polynomial(std::move(vars), F{}) {}

  static Polynomial constant(VarTablePtr vars, F field, const Coeff& c) {
    Polynomial p(std::move(vars), std::move(field));
    if (!p.field_.is_zero(c)) p.terms_.push_back({Monomial(p.vars_->size()), c});
    return p;
  }
  static Polynomial constant(VarTablePtr vars, long c)
    requires std::default_initializable<F>
  {
    F f{};
    return constant(std::move(vars), f, f.from_int(c));
  }
  static Polynomial variable(VarTablePtr vars, F field, std::size_t index, unsigned power = 1) {
    Polynomial p(std::move(vars), std::move(field));
    p.terms_.push_back({Monomial::variable(p.vars_->size(), index, power), p.field_.one()});
    return p;
  }
  static Polynomial variable(VarTablePtr vars, std::size_t index, unsigned power = 1)
    requires std::default_initializable<F>
  {
    return variable(std::move(vars), F{}, index, power);
  }
  static Polynomial monomial(VarTablePtr vars, F field, Monomial m, Coeff c) {
    Polynomial p(std::move(vars), std::move(field));
    if (m.size() != p.vars_->size()) throw std::invalid_argument("monomial size mismatch");
    if (!p.field_.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  // Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(VarTablePtr vars, F field, std::vector<Term> terms) {
    Polynomial p(std::move(vars), std::move(field));
    for (const Term& t : terms)
      if (t.monomial.size() != p.vars_->size()) throw std::invalid_argument("monomial size mismatch");
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const VarTablePtr& vars() const { return vars_; }
  const F& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  Coeff constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.empty() ? field_.zero() : terms_[0].coeff;
  }

  // Largest total degree; zero polynomial reports 0.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }
  unsigned min_degree() const { return terms_.empty() ? 0 : terms_.back().monomial.degree(); }
  // Set iff the polynomial is nonzero and all terms share one total degree.
  std::optional<unsigned> homogeneous_degree() const {
    if (terms_.empty() || degree() != min_degree()) return std::nullopt;
    return degree();
  }

  const Monomial& leading_monomial() const { return terms_.at(0).monomial; }
  const Coeff& leading_coeff() const { return terms_.at(0).coeff; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return add_scaled(o, field_.one()); }
  Polynomial& operator-=(const Polynomial& o) { return add_scaled(o, field_.neg(field_.one())); }

  // *this += c * o
  Polynomial& add_scaled(const Polynomial& o, const Coeff& c) {
    check_compatible(o);
    if (o.terms_.empty() || field_.is_zero(c)) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    const bool unit = field_.is_one(c);
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == terms_.end() || b->monomial > a->monomial) {
        out.push_back({b->monomial, unit ? b->coeff : field_.mul(c, b->coeff)});
        ++b;
      } else {
        Coeff s = field_.add(a->coeff, unit ? b->coeff : field_.mul(c, b->coeff));
        if (!field_.is_zero(s)) out.push_back({std::move(a->monomial), std::move(s)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.vars_, a.field_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() < b.terms_.size()) return b * a;
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coeff);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& s : b.terms_)
      for (const Term& t : a.terms_) r.terms_.push_back({t.monomial * s.monomial, a.field_.mul(t.coeff, s.coeff)});
    r.canonicalize();
    return r;
  }

  Polynomial scaled(const Coeff& c) const {
    Polynomial r(vars_, field_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.monomial, field_.mul(c, t.coeff)});
    return r;
  }

  // Multiplication by c*m keeps the term order, no re-sort needed.
  Polynomial times_term(const Monomial& m, const Coeff& c) const {
    Polynomial r(vars_, field_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      Coeff v = field_.mul(t.coeff, c);
      if (!field_.is_zero(v)) r.terms_.push_back({t.monomial * m, std::move(v)});
    }
    return r;
  }

  // Divides through by the leading coefficient.
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(field_.inv(terms_.front().coeff));
  }

  std::optional<Coeff> coefficient_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial > key; });
    if (it == terms_.end() || !(it->monomial == m)) return std::nullopt;
    return it->coeff;
  }

  bool operator==(const Polynomial& o) const {
    return same_table(vars_, o.vars_) && field_ == o.field_ && terms_ == o.terms_;
  }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const Term& t : terms_) h = (h * 0x100000001b3ULL) ^ t.monomial.hash() ^ (field_.hash(t.coeff) << 1);
    return h;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
      std::string c = field_.to_string(t.coeff);
      const bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      if (t.monomial.is_one()) {
        out += c;
      } else {
        if (c != "1") out += c + '*';
        out += t.monomial.to_string(*vars_);
      }
    }
    return out;
  }

  void check_compatible(const Polynomial& o) const {
    if (!same_table(vars_, o.vars_)) throw std::invalid_argument("polynomials over different variable tables");
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomials over different fields");
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.monomial > y.monomial; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i + 1;
      Coeff c = std::move(terms_[i].coeff);
      while (j < terms_.size() && terms_[j].monomial == terms_[i].monomial) {
        c = field_.add(c, terms_[j].coeff);
        ++j;
      }
      if (!field_.is_zero(c)) {
        if (w != i) terms_[w].monomial = std::move(terms_[i].monomial);
        terms_[w].coeff = std::move(c);
        ++w;
      }
      i = j;
    }
    terms_.resize(w);
  }

  VarTablePtr vars_;
  F field_;
  std::vector<Term> terms_;
};

using QPolynomial = Polynomial<RationalField>;
using FpPolynomial = Polynomial<PrimeField>;

template <class F>
Polynomial<F> pow(const Polynomial<F>& p, unsigned k) {
  Polynomial<F> result = Polynomial<F>::constant(p.vars(), p.field(), p.field().one());
  Polynomial<F> base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

// Composes p with per-variable images. Every variable occurring in p needs an
// image; all images must share one table and field.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& p, std::span<const std::optional<Polynomial<F>>> images) {
  if (images.size() != p.vars()->size()) throw std::invalid_argument("assignment size does not match variable table");
  const Polynomial<F>* any = nullptr;
  for (const auto& img : images)
    if (img) {
      any = &*img;
      break;
    }
  if (p.is_zero()) return any ? Polynomial<F>(any->vars(), any->field()) : p;
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < t.monomial.size(); ++v)
      if (t.monomial[v] > 0 && !images[v])
        throw std::invalid_argument("no assignment for variable " + p.vars()->name(v));
  if (!any) return p;  // constant polynomial
  const F& field = any->field();
  if (!(field == p.field())) throw std::invalid_argument("substitution changes the field");

  // Cache powers of each image.
  std::vector<std::vector<Polynomial<F>>> powers(images.size());
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial<F>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial<F>::constant(any->vars(), field, field.one()));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };

  Polynomial<F> result(any->vars(), field);
  for (const auto& t : p.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(any->vars(), field, t.coeff);
    for (std::size_t v = 0; v < t.monomial.size(); ++v)
      if (t.monomial[v] > 0) term *= power_of(v, t.monomial[v]);
    result += term;
  }
  return result;
}

template <class F>
Polynomial<F> substitute(const Polynomial<F>& p, const std::vector<std::optional<Polynomial<F>>>& images) {
  return substitute(p, std::span<const std::optional<Polynomial<F>>>(images));
}

// Coefficient-wise image in GF(p). Throws BadPrime on a denominator collision.
FpPolynomial reduce_mod_prime(const QPolynomial& p, const PrimeField& field);

}  // namespace detideal
