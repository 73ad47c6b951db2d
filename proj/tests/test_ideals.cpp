#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "detideal/ideal.hpp"
#include "detideal/multilinear.hpp"
#include "test_support.hpp"

using namespace detideal;
using detideal::testing::random_int_matrix;

namespace {

// Dense coefficient matrix of polynomials over the degree-k monomial basis;
// its rank over Q is an oracle independent of the sparse echelon code.
QMatrix coefficient_matrix(const std::vector<QPolynomial>& polys, const VarTablePtr& vars, unsigned k) {
  auto basis = monomials_of_degree(vars->size(), k);
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
  QMatrix m(std::max<std::size_t>(polys.size(), 1), basis.size(), Rational(0));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& t : polys[i].terms()) m(i, column.at(t.monomial)) = t.coeff;
  return m;
}

std::size_t dense_rank(const std::vector<QPolynomial>& polys, const VarTablePtr& vars, unsigned k) {
  if (polys.empty()) return 0;
  return rational_rank(coefficient_matrix(polys, vars, k));
}

// All m*g spanning the degree-k component, built without GradedSpan.
std::vector<QPolynomial> component_spanning_set(const QIdeal& gens, unsigned k) {
  std::vector<QPolynomial> out;
  for (const auto& g : gens.generators()) {
    const unsigned e = *g.homogeneous_degree();
    if (e > k) continue;
    for (const Monomial& m : monomials_of_degree(gens.vars()->size(), k - e)) out.push_back(g.times_term(m, Rational(1)));
  }
  return out;
}

// Span equality through dense ranks: rank A = rank B = rank (A u B).
bool dense_equal(const QIdeal& a, const QIdeal& b, unsigned k) {
  auto sa = component_spanning_set(a, k), sb = component_spanning_set(b, k);
  const std::size_t ra = dense_rank(sa, a.vars(), k), rb = dense_rank(sb, b.vars(), k);
  sa.insert(sa.end(), sb.begin(), sb.end());
  return ra == rb && dense_rank(sa, a.vars(), k) == ra;
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    QMatrix a = random_int_matrix(rng, n, n, 3);
    a(0, n - 1) /= 2;
    if (sgn(rational_determinant(a)) != 0) return a;
  }
}

QIdeal single(const QPolynomial& p) {
  QIdeal g(p.vars(), RationalField{});
  g.add(p);
  return g;
}

}  // namespace

TEST_CASE("minors examples") {
  QPolyMatrix x = generic_matrix(2, 2, "X");
  auto m = minors(x, 2);
  REQUIRE(m.size() == 1);
  CHECK(m.generators()[0].to_string() == "X[1][1]*X[2][2] - X[1][2]*X[2][1]");

  QPolyMatrix y = diagonal_indeterminate_matrix(3);
  auto my = minors(y, 2);
  REQUIRE(my.size() == 3);
  CHECK(my.generators()[0].to_string() == "Y1*Y2");
  CHECK(my.generators()[1].to_string() == "Y1*Y3");
  CHECK(my.generators()[2].to_string() == "Y2*Y3");

  auto m23 = minors(generic_matrix(2, 3, "X"), 2);
  CHECK(m23.size() == 3);
  for (const auto& g : m23.generators()) CHECK(g.size() == 2);
  CHECK(m23.uniform_degree() == 2u);

  CHECK_THROWS_AS(minors(x, 0), std::invalid_argument);
  CHECK_THROWS_AS(minors(x, 3), std::invalid_argument);
}

TEST_CASE("maximal minors") {
  QPolyMatrix x = generic_matrix(3, 3, "X");
  auto m = maximal_minors(x);
  REQUIRE(m.size() == 1);
  CHECK(m.generators()[0].size() == 6);

  auto t = maximal_minors(dvr_diagonal({1, 2}, 2));
  REQUIRE(t.size() == 1);
  CHECK(t.generators()[0].to_string() == "t^3");

  QPolyMatrix x23 = generic_matrix(2, 3, "X");
  CHECK(maximal_minors(x23).generators() == minors(x23, 2).generators());
}

TEST_CASE("ideal products and powers") {
  QPolyMatrix y = diagonal_indeterminate_matrix(3);
  const auto& vars = y(0, 0).vars();
  auto i1 = minors(y, 1), i2 = minors(y, 2);
  auto unit = QIdeal::unit(vars, RationalField{});
  CHECK(ideal_product(i2, unit).generators() == i2.generators());

  auto y1 = single(QPolynomial::variable(vars, 0)), y2 = single(QPolynomial::variable(vars, 1));
  auto p = ideal_product(y1, y2);
  REQUIRE(p.size() == 1);
  CHECK(p.generators()[0].to_string() == "Y1*Y2");

  // Oracle: count distinct exponent vectors among the 9 products.
  std::set<std::vector<unsigned>> distinct;
  for (const auto& a : i2.generators())
    for (const auto& b : i1.generators()) {
      auto m = (a * b).leading_monomial();
      distinct.insert(std::vector<unsigned>(m.exponents().begin(), m.exponents().end()));
    }
  CHECK(distinct.size() == 7);
  CHECK(ideal_product(i2, i1).size() == 7);

  CHECK(ideal_power(i1, 0).generators() == unit.generators());
  CHECK(ideal_power(i1, 1).generators() == i1.generators());
  QIdeal two(vars, RationalField{});
  two.add(QPolynomial::variable(vars, 0));
  two.add(QPolynomial::variable(vars, 1));
  auto sq = ideal_power(two, 2);
  std::vector<std::string> names;
  for (const auto& g : sq.generators()) names.push_back(g.to_string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"Y1*Y2", "Y1^2", "Y2^2"});
}

TEST_CASE("I^sigma and doubly initial tableaux") {
  QPolyMatrix x = generic_matrix(2, 2, "X");
  const QPolynomial det = determinant(x);
  auto top = i_sigma_upper(x, Partition{2});
  REQUIRE(top.size() == 1);
  CHECK(top.generators()[0] == det);

  auto ones = i_sigma_upper(x, Partition({1, 1}));
  CHECK(ones.size() == 10);  // distinct products of two of 4 entries
  CHECK(ones.uniform_degree() == 2u);

  auto mixed = i_sigma_upper(x, Partition({2, 1}));
  REQUIRE(mixed.size() == 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const QPolynomial expected = det * x(i, j);
      CHECK(std::find(mixed.generators().begin(), mixed.generators().end(), expected) != mixed.generators().end());
    }
  CHECK_THROWS_AS(i_sigma_upper(x, Partition{3}), std::invalid_argument);

  QPolyMatrix x3 = generic_matrix(3, 3, "X");
  CHECK(doubly_initial_tableau(x3, Partition{1}) == x3(0, 0));
  CHECK(doubly_initial_tableau(x, Partition({2, 1})) == det * x(0, 0));
  CHECK(doubly_initial_tableau(x3, Partition({3, 3, 3})) == pow(determinant(x3), 3));
  CHECK_THROWS_AS(doubly_initial_tableau(x, Partition{3}), std::invalid_argument);
}

TEST_CASE("graded components") {
  auto vars = make_var_table({"x", "y"});
  auto x = QPolynomial::variable(vars, 0), y = QPolynomial::variable(vars, 1);
  auto cx = graded_component(single(x), 2);
  CHECK(cx.rank() == 2);
  CHECK(cx.contains(x * x));
  CHECK(cx.contains(x * y));
  CHECK_FALSE(cx.contains(y * y));
  CHECK(cx.contains(QPolynomial(vars)));
  CHECK_THROWS_AS(cx.contains(x), std::invalid_argument);
  CHECK_THROWS_AS(graded_component(single(x + x * y), 2), std::invalid_argument);

  CHECK(graded_component(maximal_minors(generic_matrix(2, 2, "X")), 2).rank() == 1);

  QPolyMatrix x23 = generic_matrix(2, 3, "X");
  auto i2 = minors(x23, 2);
  auto c = graded_component(i2, 2);
  CHECK(c.rank() == 3);
  CHECK(c.rank() == dense_rank(i2.generators(), i2.vars(), 2));
  for (unsigned k = 2; k <= 4; ++k)
    CHECK(graded_component(i2, k).rank() == dense_rank(component_spanning_set(i2, k), i2.vars(), k));
}

TEST_CASE("echelon form is reduced and deterministic") {
  std::mt19937_64 rng(21);
  auto vars = make_var_table({"a", "b", "c"});
  auto basis = monomials_of_degree(3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<QPolynomial> polys;
    for (int i = 0; i < 6; ++i) {
      QPolynomial p(vars);
      for (const auto& m : basis)
        if (rng() % 3 == 0) p += QPolynomial::monomial(vars, {}, m, Rational(static_cast<long>(rng() % 5) - 2));
      polys.push_back(p);
    }
    polys.push_back(polys[0] + polys[1]);
    auto s = span_of(vars, RationalField{}, 3, polys);
    CHECK(s.rank() == dense_rank(polys, vars, 3));
    auto pivots = s.pivots();
    for (std::size_t i = 0; i < s.rank(); ++i) {
      CHECK(s.rows()[i].leading_coeff() == 1);
      for (std::size_t j = 0; j < s.rank(); ++j)
        if (i != j) CHECK_FALSE(s.rows()[j].coefficient_of(pivots[i]).has_value());
    }
    std::reverse(polys.begin(), polys.end());
    CHECK(span_equal(s, span_of(vars, RationalField{}, 3, polys)));
  }
}

TEST_CASE("span sum and intersection") {
  auto vars = make_var_table({"x", "y"});
  auto x = QPolynomial::variable(vars, 0), y = QPolynomial::variable(vars, 1);
  auto a = graded_component(single(x), 2), b = graded_component(single(y), 2);
  auto zero = span_of(vars, RationalField{}, 2, {});
  CHECK(span_equal(span_sum(a, zero), a));
  CHECK(span_equal(span_intersect(a, a), a));
  auto ab = span_intersect(a, b);
  REQUIRE(ab.rank() == 1);
  CHECK(ab.contains(x * y));
  CHECK(span_sum(a, b).rank() == 3);
  CHECK_THROWS_AS(span_sum(a, graded_component(single(x), 3)), std::invalid_argument);

  // Random subspaces: dim(A cap B) = dim A + dim B - dim(A + B), and the
  // intersection lies in both.
  std::mt19937_64 rng(31);
  auto vars3 = make_var_table({"a", "b", "c"});
  auto basis = monomials_of_degree(3, 2);
  auto random_combo = [&] {
    QPolynomial p(vars3);
    for (const auto& m : basis) p += QPolynomial::monomial(vars3, {}, m, Rational(static_cast<long>(rng() % 3) - 1));
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<QPolynomial> pa, pb;
    for (int i = 0; i < 4; ++i) pa.push_back(random_combo());
    for (int i = 0; i < 3; ++i) pb.push_back(random_combo());
    pb.push_back(pa[0] - pa[1]);
    auto sa = span_of(vars3, RationalField{}, 2, pa), sb = span_of(vars3, RationalField{}, 2, pb);
    auto both = pa;
    both.insert(both.end(), pb.begin(), pb.end());
    auto meet = span_intersect(sa, sb);
    CHECK(meet.rank() == dense_rank(pa, vars3, 2) + dense_rank(pb, vars3, 2) - dense_rank(both, vars3, 2));
    for (const auto& r : meet.rows()) {
      CHECK(sa.contains(r));
      CHECK(sb.contains(r));
    }
  }
}

TEST_CASE("intersection identity for a product of independent ideals") {
  // X and Y are 2x2 generic on disjoint variables: I(X)^2 I(Y)^2 equals
  // I(X)^2 cap I(Y)^2 in the generating degree 8.
  auto vars = generic_table({{"X", 2, 2}, {"Y", 2, 2}});
  QPolyMatrix x = generic_matrix(vars, 2, 2, "X"), y = generic_matrix(vars, 2, 2, "Y");
  auto ix = ideal_power(maximal_minors(x), 2), iy = ideal_power(maximal_minors(y), 2);
  auto product = graded_component(ideal_product(ix, iy), 8);
  auto meet = span_intersect(graded_component(ix, 8), graded_component(iy, 8));
  CHECK(product.rank() == 1);
  CHECK(span_equal(product, meet));
}

TEST_CASE("modular rank") {
  auto vars = make_var_table({"x", "y"});
  PrimeField p(1'000'000'007);
  CHECK(modular_rank(QIdeal(vars, RationalField{}), 3, p) == 0);
  auto i2 = minors(generic_matrix(2, 3, "X"), 2);
  for (std::uint32_t q : {5u, 7u, 101u, 2147483647u}) CHECK(modular_rank(i2, 2, PrimeField(q)) == 3);

  // x - 2y and x + y span a 2-dim space over Q but coincide mod 3.
  QIdeal g(vars, RationalField{});
  auto x = QPolynomial::variable(vars, 0), y = QPolynomial::variable(vars, 1);
  g.add(x - y.scaled(Rational(2)));
  g.add(x + y);
  CHECK(graded_component(g, 1).rank() == 2);
  CHECK(modular_rank(g, 1, PrimeField(3)) == 1);
  CHECK(modular_rank(g, 1, PrimeField(5)) == 2);

  QIdeal bad(vars, RationalField{});
  bad.add(x.scaled(Rational(1, 7)));
  CHECK_THROWS_AS(modular_rank(bad, 1, PrimeField(7)), BadPrime);

  // Soundness: never above the exact rank.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    QPolyMatrix a = generic_matrix(2, 3, "X");
    QIdeal gens(a(0, 0).vars(), RationalField{});
    for (int i = 0; i < 4; ++i) {
      QPolynomial f(a(0, 0).vars());
      for (std::size_t v = 0; v < 6; ++v) f += a(v / 3, v % 3).scaled(Rational(static_cast<long>(rng() % 7) - 3));
      gens.add(f * f);
    }
    const std::size_t exact = graded_component(gens, 3).rank();
    for (std::uint32_t q : {3u, 5u, 7u, 1'000'003u}) CHECK(modular_rank(gens, 3, PrimeField(q)) <= exact);
  }
}

TEST_CASE("GL substitution") {
  QPolyMatrix x = generic_matrix(3, 3, "X");
  QPolynomial det = determinant(x);
  QMatrix id(3, 3, Rational(0));
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(apply_gl_substitution(det, x, id, id) == det);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 5; ++trial) {
    QMatrix a = random_invertible(rng, 3), b = random_invertible(rng, 3);
    GlSubstitution sub(x, a, b);
    const Rational factor = rational_determinant(a) / rational_determinant(b);
    CHECK(sub.apply(det) == det.scaled(factor));
    QPolynomial cubic = x(0, 0) * x(1, 2) * x(2, 1) + x(0, 1) * x(0, 1) * x(2, 2);
    CHECK(sub.apply(cubic).homogeneous_degree() == 3u);
  }
  QMatrix singular(3, 3, Rational(0));
  CHECK_THROWS_AS(apply_gl_substitution(det, x, singular, id), std::domain_error);
  CHECK_THROWS_AS(apply_gl_substitution(det, x, id, singular), std::domain_error);
}

TEST_CASE("valuations on the t-adic diagonal") {
  auto vars = make_var_table({"t"});
  auto t = QPolynomial::variable(vars, 0);
  CHECK(min_valuation(single(pow(t, 3))) == 3);
  QIdeal g(vars, RationalField{});
  g.add(pow(t, 2) + pow(t, 5));
  g.add(pow(t, 4));
  CHECK(min_valuation(g) == 2);
  CHECK_THROWS_AS(min_valuation(QIdeal(vars, RationalField{})), std::invalid_argument);

  CHECK(min_valuation(maximal_minors(symmetric_power_matrix(dvr_diagonal({1, 2}, 2), 2))) == 9);

  // Oracle: S^d of diag(t^a) is diag(t^{alpha . a}); its maximal minor is the
  // product over all multidegrees alpha.
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + rng() % 3, m = n + rng() % 2;
    const unsigned d = 1 + rng() % 3;
    std::vector<unsigned> a(n);
    for (auto& e : a) e = rng() % 4;
    unsigned expected = 0;
    for (const auto& alpha : multidegrees(n, d))
      for (std::size_t i = 0; i < n; ++i) expected += alpha[i] * a[i];
    CHECK(min_valuation(maximal_minors(symmetric_power_matrix(dvr_diagonal(a, m), d))) == expected);
    CHECK(expected == power_constants(n, d, n).s * std::accumulate(a.begin(), a.end(), 0u));
  }
}

TEST_CASE("symmetric power ideal equals a power of the maximal-minor ideal") {
  // (n, m, d) = (2, 2, 2) and (2, 3, 2): generating degree n*s.
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}}) {
    QPolyMatrix x = generic_matrix(n, m, "X");
    const unsigned s = power_constants(n, 2, n).s;
    auto lhs = maximal_minors(symmetric_power_matrix(x, 2));
    auto rhs = ideal_power(maximal_minors(x), s);
    const unsigned k = n * s;
    CHECK(lhs.uniform_degree() == k);
    CHECK(span_equal(graded_component(lhs, k), graded_component(rhs, k)));
    CHECK(dense_equal(lhs, rhs, k));
  }
  // Any 3x3 minor of S^2(X) lies in the degree-6 component of I_2(X)^3.
  QPolyMatrix x = generic_matrix(2, 3, "X");
  auto cube = graded_component(ideal_power(maximal_minors(x), 3), 6);
  const auto sym_minors = minors(symmetric_power_matrix(x, 2), 3);
  for (const auto& g : sym_minors.generators()) CHECK(cube.contains(g));
}

TEST_CASE("exterior and tensor power ideals") {
  QPolyMatrix x = generic_matrix(2, 3, "X");
  // Lambda^2 of a 2x3 map: I = I_2(X), e = C(1,1) = 1.
  auto ext = maximal_minors(exterior_power_matrix(x, 2));
  CHECK(span_equal(graded_component(ext, 2), graded_component(maximal_minors(x), 2)));

  auto vars = generic_table({{"X", 2, 2}, {"Y", 2, 2}});
  QPolyMatrix a = generic_matrix(vars, 2, 2, "X"), b = generic_matrix(vars, 2, 2, "Y");
  auto lhs = maximal_minors(tensor_product_matrix(a, b));
  auto rhs = ideal_product(ideal_power(maximal_minors(a), 2), ideal_power(maximal_minors(b), 2));
  CHECK(span_equal(graded_component(lhs, 8), graded_component(rhs, 8)));
}

TEST_CASE("GL stability of a determinantal component") {
  QPolyMatrix x = generic_matrix(2, 2, "X");
  auto span = graded_component(minors(symmetric_power_matrix(x, 2), 2), 4);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 3; ++trial) {
    GlSubstitution sub(x, random_invertible(rng, 2), random_invertible(rng, 2));
    for (const auto& row : span.rows()) CHECK(span.contains(sub.apply(row)));
  }
  // A non-stable space: the span of X11^2 alone is moved off itself.
  auto mono = span_of(x(0, 0).vars(), RationalField{}, 2, {x(0, 0) * x(0, 0)});
  QMatrix a(2, 2, Rational(1));
  a(1, 1) = 2;
  QMatrix id(2, 2, Rational(0));
  id(0, 0) = id(1, 1) = 1;
  CHECK_FALSE(mono.contains(apply_gl_substitution(x(0, 0) * x(0, 0), x, a, id)));
}

TEST_CASE("I^(sigma) equals I^sigma") {
  QPolyMatrix x = generic_matrix(3, 3, "X");
  for (const Partition& sigma : {Partition({2, 1}), Partition({1, 1})}) {
    auto lower = i_sigma_lower_component(x, sigma, sigma.size());
    auto upper = graded_component(i_sigma_upper(x, sigma), sigma.size());
    CHECK(span_equal(lower, upper));
  }
  // I^((1)) in degree 2 is all quadrics.
  CHECK(i_sigma_lower_component(x, Partition{1}, 2).rank() == count_monomials(9, 2));
}
