#pragma once

// Degree-k components of homogeneous ideals as row spaces over Q or GF(p).
//
// Columns are the degree-k monomials in descending graded-lex order, so a
// row's pivot column is its leading monomial. Rows are stored sparse and in
// reduced row-echelon form: monic, pivots strictly increasing as columns, and
// no row mentions another row's pivot.

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "detideal/polynomial.hpp"

namespace detideal {

template <class F>
class GradedSpan {
 public:
  using Poly = Polynomial<F>;

  GradedSpan(VarTablePtr vars, F field, unsigned degree) : vars_(std::move(vars)), field_(std::move(field)), degree_(degree) {}

  const VarTablePtr& vars() const { return vars_; }
  const F& field() const { return field_; }
  unsigned degree() const { return degree_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Poly>& rows() const { return rows_; }

  std::uint64_t ambient_dimension() const { return count_monomials(vars_->size(), degree_); }
  std::vector<Monomial> basis_monomials() const { return monomials_of_degree(vars_->size(), degree_); }
  std::vector<Monomial> pivots() const {
    std::vector<Monomial> out;
    for (const Poly& r : rows_) out.push_back(r.leading_monomial());
    return out;
  }

  // Inserts a vector of the ambient space; returns true when the rank grows.
  // The reduced form is restored lazily by normalize().
  bool insert(Poly p) {
    check_member_shape(p);
    top_reduce(p);
    if (p.is_zero()) return false;
    p = p.monic();
    pivot_.emplace(p.leading_monomial(), rows_.size());
    rows_.push_back(std::move(p));
    reduced_ = false;
    return true;
  }

  // Brings the rows into reduced row-echelon form.
  void normalize() {
    if (reduced_) return;
    std::vector<Poly> rows = std::move(rows_);
    std::sort(rows.begin(), rows.end(), [](const Poly& a, const Poly& b) { return a.leading_monomial() < b.leading_monomial(); });
    rows_.clear();
    pivot_.clear();
    // Smallest pivot first: each row's tail only meets smaller pivots.
    for (Poly& r : rows) {
      reduce_from(r, 1);
      pivot_.emplace(r.leading_monomial(), rows_.size());
      rows_.push_back(std::move(r));
    }
    std::reverse(rows_.begin(), rows_.end());
    pivot_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_.emplace(rows_[i].leading_monomial(), i);
    reduced_ = true;
  }

  // Remainder of p against the rows (zero iff p lies in the span).
  Poly normal_form(Poly p) const {
    check_member_shape(p);
    reduce_from(p, 0);
    return p;
  }

  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

  bool operator==(const GradedSpan& o) const {
    if (!same_table(vars_, o.vars_) || !(field_ == o.field_) || degree_ != o.degree_) return false;
    if (!reduced_ || !o.reduced_) throw std::logic_error("compare spans after normalize()");
    return rows_ == o.rows_;
  }

  void check_same_ambient(const GradedSpan& o) const {
    if (!same_table(vars_, o.vars_)) throw std::invalid_argument("spans over different variable tables");
    if (!(field_ == o.field_)) throw std::invalid_argument("spans over different fields");
    if (degree_ != o.degree_) throw std::invalid_argument("spans of different degrees");
  }

 private:
  void check_member_shape(const Poly& p) const {
    if (!same_table(vars_, p.vars())) throw std::invalid_argument("polynomial over a different variable table");
    if (!(field_ == p.field())) throw std::invalid_argument("polynomial over a different field");
    if (!p.is_zero() && p.homogeneous_degree() != degree_)
      throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(degree_));
  }

  const Poly* row_with_pivot(const Monomial& m) const {
    auto it = pivot_.find(m);
    return it == pivot_.end() ? nullptr : &rows_[it->second];
  }

  void top_reduce(Poly& p) const {
    while (!p.is_zero()) {
      const Poly* row = row_with_pivot(p.leading_monomial());
      if (!row) return;
      p.add_scaled(*row, field_.neg(p.leading_coeff()));
    }
  }

  // Eliminates every pivot monomial at or after term position `start`.
  void reduce_from(Poly& p, std::size_t start) const {
    std::size_t pos = start;
    while (pos < p.size()) {
      const auto& term = p.terms()[pos];
      const Poly* row = row_with_pivot(term.monomial);
      if (!row) {
        ++pos;
        continue;
      }
      // Terms before pos are unaffected since the row's tail is smaller.
      p.add_scaled(*row, field_.neg(term.coeff));
    }
  }

  VarTablePtr vars_;
  F field_;
  unsigned degree_;
  std::vector<Poly> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_;
  bool reduced_ = true;
};

using QSpan = GradedSpan<RationalField>;
using FpSpan = GradedSpan<PrimeField>;

template <class F>
GradedSpan<F> span_of(const VarTablePtr& vars, const F& field, unsigned degree, const std::vector<Polynomial<F>>& polys) {
  GradedSpan<F> s(vars, field, degree);
  for (const auto& p : polys) s.insert(p);
  s.normalize();
  return s;
}

template <class F>
GradedSpan<F> span_sum(const GradedSpan<F>& a, const GradedSpan<F>& b) {
  a.check_same_ambient(b);
  GradedSpan<F> s = a.rank() >= b.rank() ? a : b;
  for (const auto& r : (a.rank() >= b.rank() ? b : a).rows()) s.insert(r);
  s.normalize();
  return s;
}

// Zassenhaus: rows (u | u) for u in a and (w | 0) for w in b; rows whose left
// half vanishes span the intersection. The halves are realized by two new
// leading variables, so the left half sorts first in graded-lex order.
template <class F>
GradedSpan<F> span_intersect(const GradedSpan<F>& a, const GradedSpan<F>& b) {
  a.check_same_ambient(b);
  std::vector<std::string> names{"__left", "__right"};
  for (const auto& n : a.vars()->names()) names.push_back(n);
  VarTablePtr doubled = make_var_table(std::move(names));
  const F& field = a.field();
  const unsigned left[] = {1, 0}, right[] = {0, 1};

  auto lift = [&](const Polynomial<F>& p, std::span<const unsigned> tag) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : p.terms()) terms.push_back({t.monomial.with_leading(tag), t.coeff});
    return Polynomial<F>::from_terms(doubled, field, std::move(terms));
  };

  GradedSpan<F> z(doubled, field, a.degree() + 1);
  for (const auto& u : a.rows()) z.insert(lift(u, left) + lift(u, right));
  for (const auto& w : b.rows()) z.insert(lift(w, left));
  z.normalize();

  GradedSpan<F> out(a.vars(), field, a.degree());
  for (const auto& r : z.rows()) {
    if (r.leading_monomial()[0] != 0) continue;
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : r.terms()) terms.push_back({t.monomial.drop_leading(2), t.coeff});
    out.insert(Polynomial<F>::from_terms(a.vars(), field, std::move(terms)));
  }
  out.normalize();
  return out;
}

template <class F>
bool span_equal(const GradedSpan<F>& a, const GradedSpan<F>& b) {
  a.check_same_ambient(b);
  return a == b;
}

}  // namespace detideal
