#pragma once

// Generator sets of homogeneous ideals: minors, products, powers, the ideals
// I^sigma, doubly initial tableaux, and their graded components.

#include <optional>
#include <unordered_set>
#include <vector>

#include "detideal/determinant.hpp"
#include "detideal/matrix.hpp"
#include "detideal/span.hpp"
#include "detideal/young.hpp"

namespace detideal {

// Finite list of nonzero canonical generators; an empty list is the zero ideal.
template <class F>
class IdealGens {
 public:
  using Poly = Polynomial<F>;

  IdealGens(VarTablePtr vars, F field) : vars_(std::move(vars)), field_(std::move(field)) {}

  static IdealGens unit(VarTablePtr vars, F field) {
    IdealGens g(vars, field);
    g.add(Poly::constant(vars, field, field.one()));
    return g;
  }

  // Appends p unless it is zero.
  void add(Poly p) {
    if (!same_table(vars_, p.vars())) throw std::invalid_argument("generator over a different variable table");
    if (!(field_ == p.field())) throw std::invalid_argument("generator over a different field");
    if (p.is_zero()) return;
    gens_.push_back(std::move(p));
  }
  // Appends p unless it is zero or already present.
  void add_unique(Poly p) {
    if (p.is_zero()) return;
    for (const Poly& g : gens_)
      if (g == p) return;
    add(std::move(p));
  }

  const VarTablePtr& vars() const { return vars_; }
  const F& field() const { return field_; }
  const std::vector<Poly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  bool homogeneous() const {
    for (const Poly& g : gens_)
      if (!g.homogeneous_degree()) return false;
    return true;
  }
  // Set when every generator is homogeneous of one common degree.
  std::optional<unsigned> uniform_degree() const {
    if (gens_.empty()) return std::nullopt;
    auto d = gens_.front().homogeneous_degree();
    for (const Poly& g : gens_)
      if (g.homogeneous_degree() != d) return std::nullopt;
    return d;
  }

 private:
  VarTablePtr vars_;
  F field_;
  std::vector<Poly> gens_;
};

using QIdeal = IdealGens<RationalField>;
using FpIdeal = IdealGens<PrimeField>;

namespace detail {

template <class F>
struct PolyHash {
  std::size_t operator()(const Polynomial<F>& p) const { return p.hash(); }
};

}  // namespace detail

// All t x t minors in lexicographic (row subset, column subset) order, zeros dropped.
template <class F>
IdealGens<F> minors(const PolyMatrix<F>& a, std::size_t t) {
  if (t == 0 || t > std::min(a.rows(), a.cols())) throw std::invalid_argument("minor size out of range");
  IdealGens<F> out(a(0, 0).vars(), a(0, 0).field());
  for (auto& e : nonzero_minors(a, t)) out.add(std::move(e.value));
  return out;
}

template <class F>
IdealGens<F> maximal_minors(const PolyMatrix<F>& a) {
  return minors(a, std::min(a.rows(), a.cols()));
}

// Pairwise products, deduplicated, in first-occurrence order.
template <class F>
IdealGens<F> ideal_product(const IdealGens<F>& a, const IdealGens<F>& b) {
  if (!same_table(a.vars(), b.vars()) || !(a.field() == b.field()))
    throw std::invalid_argument("ideals over different rings");
  IdealGens<F> out(a.vars(), a.field());
  std::unordered_set<Polynomial<F>, detail::PolyHash<F>> seen;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      Polynomial<F> p = f * g;
      if (p.is_zero() || !seen.insert(p).second) continue;
      out.add(std::move(p));
    }
  return out;
}

template <class F>
IdealGens<F> ideal_power(const IdealGens<F>& a, unsigned k) {
  IdealGens<F> out = IdealGens<F>::unit(a.vars(), a.field());
  for (unsigned i = 0; i < k; ++i) out = ideal_product(out, a);
  return out;
}

// I^sigma(A) = prod_i I_{s_i}(A).
template <class F>
IdealGens<F> i_sigma_upper(const PolyMatrix<F>& a, const Partition& sigma) {
  if (sigma.largest() > std::min(a.rows(), a.cols())) throw std::invalid_argument("partition part exceeds matrix size");
  IdealGens<F> out = IdealGens<F>::unit(a(0, 0).vars(), a(0, 0).field());
  std::vector<std::optional<IdealGens<F>>> cache(sigma.largest() + 1);
  for (unsigned s : sigma.parts()) {
    if (!cache[s]) cache[s] = minors(a, s);
    out = ideal_product(out, *cache[s]);
  }
  return out;
}

// Product of the upper-left s_i x s_i minors.
template <class F>
Polynomial<F> doubly_initial_tableau(const PolyMatrix<F>& a, const Partition& sigma) {
  if (sigma.largest() > std::min(a.rows(), a.cols())) throw std::invalid_argument("partition part exceeds matrix size");
  const VarTablePtr& vars = a(0, 0).vars();
  const F& field = a(0, 0).field();
  Polynomial<F> out = Polynomial<F>::constant(vars, field, field.one());
  std::vector<std::optional<Polynomial<F>>> cache(sigma.largest() + 1);
  for (unsigned s : sigma.parts()) {
    if (!cache[s]) {
      std::vector<std::size_t> idx(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = i;
      cache[s] = determinant(submatrix(a, idx, idx));
    }
    out *= *cache[s];
  }
  return out;
}

// Span of { m * g : g a generator, m a monomial of degree k - deg g }.
// Generators of degree above k contribute nothing.
template <class F>
GradedSpan<F> graded_component(const IdealGens<F>& gens, unsigned k) {
  if (!gens.homogeneous()) throw std::invalid_argument("graded component of inhomogeneous generators");
  GradedSpan<F> span(gens.vars(), gens.field(), k);
  const std::size_t nvars = gens.vars()->size();
  std::vector<std::optional<std::vector<Monomial>>> multipliers(k + 1);
  for (const auto& g : gens.generators()) {
    const unsigned e = *g.homogeneous_degree();
    if (e > k) continue;
    auto& ms = multipliers[k - e];
    if (!ms) ms = monomials_of_degree(nvars, k - e);
    for (const Monomial& m : *ms) span.insert(g.times_term(m, gens.field().one()));
  }
  span.normalize();
  return span;
}

// Degree-k component of I^(sigma)(A) = sum over tau >= sigma of I^tau(A), for
// a matrix with linear entries. Only tau with |sigma| <= |tau| <= k and parts
// <= min(rows, cols) contribute; larger minors vanish.
template <class F>
GradedSpan<F> i_sigma_lower_component(const PolyMatrix<F>& a, const Partition& sigma, unsigned k) {
  const unsigned bound = static_cast<unsigned>(std::min(a.rows(), a.cols()));
  GradedSpan<F> out(a(0, 0).vars(), a(0, 0).field(), k);
  out.normalize();
  for (unsigned size = sigma.size(); size <= k; ++size)
    for (const Partition& tau : partitions_of(size, bound))
      if (leq(sigma, tau)) out = span_sum(out, graded_component(i_sigma_upper(a, tau), k));
  return out;
}

IdealGens<PrimeField> reduce_mod_prime(const IdealGens<RationalField>& gens, const PrimeField& field);

// Rank of the degree-k component over GF(prime). Throws BadPrime on a
// denominator collision.
std::size_t modular_rank(const IdealGens<RationalField>& gens, unsigned k, const PrimeField& field);

// Lowest t-degree over generators that are polynomials in t alone.
unsigned min_valuation(const IdealGens<RationalField>& gens);

// The substitution X -> A X B^{-1} on the entries of a generic m x n matrix X;
// every other variable is fixed. Images of monomials are cached, so one
// object should be reused across many polynomials.
class GlSubstitution {
 public:
  GlSubstitution(const QPolyMatrix& generic, const QMatrix& a, const QMatrix& b);

  QPolynomial apply(const QPolynomial& p);

 private:
  const QPolynomial& image_of(const Monomial& m);

  VarTablePtr vars_;
  std::vector<QPolynomial> var_images_;
  std::unordered_map<Monomial, QPolynomial, MonomialHash> cache_;
};

QPolynomial apply_gl_substitution(const QPolynomial& p, const QPolyMatrix& generic, const QMatrix& a, const QMatrix& b);

// Inverse over Q; throws std::domain_error when singular.
QMatrix invert(const QMatrix& a);

}  // namespace detideal
