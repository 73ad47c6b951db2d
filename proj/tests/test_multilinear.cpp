#include <doctest.h>

#include "detideal/multilinear.hpp"
#include "test_support.hpp"

using namespace detideal;
using detideal::testing::as_poly;
using detideal::testing::random_int_matrix;

namespace {

// Expands prod_j (sum_i A(i,j) e_i)^{alpha_j} in a ring extended by basis
// symbols e_1..e_n and reads off coefficients; independent of the
// accumulation used by symmetric_power_matrix.
QPolyMatrix symmetric_power_oracle(const QPolyMatrix& a, unsigned d) {
  const std::size_t n = a.rows(), m = a.cols();
  const VarTablePtr& base = a(0, 0).vars();
  std::vector<std::string> names = base->names();
  for (std::size_t i = 0; i < n; ++i) names.push_back("__e" + std::to_string(i));
  auto ext = make_var_table(names);
  auto lift = [&](const QPolynomial& p) {
    std::vector<QPolynomial::Term> terms;
    for (const auto& t : p.terms()) {
      std::vector<unsigned> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
      e.resize(ext->size(), 0);
      terms.push_back({Monomial(std::span<const unsigned>(e)), t.coeff});
    }
    return QPolynomial::from_terms(ext, {}, std::move(terms));
  };
  auto rows = symmetric_basis(n, d), cols = symmetric_basis(m, d);
  QPolyMatrix out = zero_matrix(base, RationalField{}, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    QPolynomial prod = QPolynomial::constant(ext, 1);
    for (std::size_t j = 0; j < m; ++j) {
      QPolynomial column(ext);
      for (std::size_t i = 0; i < n; ++i) column += lift(a(i, j)) * QPolynomial::variable(ext, base->size() + i);
      prod *= pow(column, cols.entries[c][j]);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      QPolynomial entry(base);
      for (const auto& t : prod.terms()) {
        bool match = true;
        for (std::size_t i = 0; i < n; ++i) match = match && t.monomial[base->size() + i] == rows.entries[r][i];
        if (!match) continue;
        std::vector<unsigned> e(t.monomial.exponents().begin(), t.monomial.exponents().begin() + static_cast<long>(base->size()));
        entry += QPolynomial::monomial(base, {}, Monomial(std::span<const unsigned>(e)), t.coeff);
      }
      out(r, c) = entry;
    }
  }
  return out;
}

Rational det_of(const QMatrix& m) { return rational_determinant(m); }

QMatrix numeric(const QPolyMatrix& m) { return constant_entries(m); }

QMatrix random_rank_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  while (true) {
    QMatrix m = multiply(random_int_matrix(rng, rows, r, 3), random_int_matrix(rng, r, cols, 3));
    if (rational_rank(m) == r) return m;
  }
}

}  // namespace

TEST_CASE("power bases") {
  auto s = symmetric_basis(3, 2);
  CHECK(s.size() == binomial(4, 2));
  CHECK(s.entries.front() == std::vector<unsigned>{2, 0, 0});
  CHECK(s.entries.back() == std::vector<unsigned>{0, 0, 2});
  CHECK(std::is_sorted(s.entries.begin(), s.entries.end(), std::greater<>()));
  auto e = exterior_basis(4, 2);
  CHECK(e.size() == 6);
  CHECK(e.entries[1] == std::vector<unsigned>{0, 2});
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (std::uint64_t d = 1; d <= 4; ++d) {
      auto c = power_constants(n, d, n);
      CHECK(c.s * n == d * binomial(n + d - 1, d));
      CHECK(c.e * n == d * binomial(n, d));
      CHECK(c.rank_bound == symmetric_basis(n, static_cast<unsigned>(d)).size());
    }
}

TEST_CASE("test matrices") {
  auto x11 = generic_matrix(1, 1, "X");
  CHECK(x11(0, 0).to_string() == "X[1][1]");
  auto x = generic_matrix(2, 3, "X");
  CHECK(x(0, 0).vars()->size() == 6);
  auto table = generic_table({{"X", 3, 3}, {"Y", 3, 3}});
  auto gx = generic_matrix(table, 3, 3, "X"), gy = generic_matrix(table, 3, 3, "Y");
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) CHECK_FALSE(gx(i / 3, i % 3) == gy(j / 3, j % 3));

  auto y = diagonal_indeterminate_matrix(3);
  CHECK(y(1, 1).to_string() == "Y2");
  CHECK(y(0, 2).is_zero());

  auto t = dvr_diagonal({0}, 1);
  CHECK(t(0, 0) == QPolynomial::constant(t(0, 0).vars(), 1));
  auto t2 = dvr_diagonal({1, 2}, 3);
  CHECK(t2.cols() == 3);
  CHECK(t2(1, 1).to_string() == "t^2");
  CHECK(t2(0, 2).is_zero());
  CHECK(t2(1, 2).is_zero());
}

TEST_CASE("symmetric power examples") {
  auto empty = make_var_table({});
  for (unsigned d = 1; d <= 3; ++d) {
    auto id = identity_matrix(empty, RationalField{}, 3);
    CHECK(symmetric_power_matrix(id, d) == identity_matrix(empty, RationalField{}, binomial(2 + d, d)));
  }

  auto y = diagonal_indeterminate_matrix(2);
  auto s = symmetric_power_matrix(y, 2);
  REQUIRE(s.rows() == 3);
  CHECK(s(0, 0).to_string() == "Y1^2");
  CHECK(s(1, 1).to_string() == "Y1*Y2");
  CHECK(s(2, 2).to_string() == "Y2^2");
  CHECK(s(0, 1).is_zero());

  // [[a,b],[c,d]]: column (1,1) is (a e1 + c e2)(b e1 + d e2).
  auto vars = make_var_table({"a", "b", "c", "d"});
  QPolyMatrix g = zero_matrix(vars, RationalField{}, 2, 2);
  for (std::size_t i = 0; i < 4; ++i) g(i / 2, i % 2) = QPolynomial::variable(vars, i);
  auto sg = symmetric_power_matrix(g, 2);
  CHECK(sg(0, 1).to_string() == "a*b");
  CHECK(sg(1, 1).to_string() == "a*d + b*c");
  CHECK(sg(2, 1).to_string() == "c*d");
  CHECK(sg(1, 0).to_string() == "2*a*c");
  CHECK(sg == symmetric_power_oracle(g, 2));

  auto x = generic_matrix(2, 3, "X");
  for (unsigned d = 1; d <= 3; ++d) {
    auto sx = symmetric_power_matrix(x, d);
    CHECK(sx == symmetric_power_oracle(x, d));
    for (std::size_t i = 0; i < sx.rows(); ++i)
      for (std::size_t j = 0; j < sx.cols(); ++j)
        if (!sx(i, j).is_zero()) CHECK(sx(i, j).homogeneous_degree() == d);
  }
}

TEST_CASE("exterior and tensor examples") {
  auto x = generic_matrix(3, 4, "X");
  CHECK(exterior_power_matrix(x, 1) == x);
  auto empty = make_var_table({});
  CHECK(exterior_power_matrix(identity_matrix(empty, RationalField{}, 4), 2) == identity_matrix(empty, RationalField{}, 6));
  auto y = diagonal_indeterminate_matrix(3);
  auto e = exterior_power_matrix(y, 2);
  CHECK(e(0, 0).to_string() == "Y1*Y2");
  CHECK(e(1, 1).to_string() == "Y1*Y3");
  CHECK(e(2, 2).to_string() == "Y2*Y3");
  CHECK(e(0, 1).is_zero());
  CHECK_THROWS_AS(exterior_power_matrix(x, 4), std::invalid_argument);

  CHECK(tensor_product_matrix(x, identity_matrix(x(0, 0).vars(), RationalField{}, 1)) == x);
  auto vars = make_var_table({"a", "b", "c", "d"});
  auto v = [&](std::size_t i) { return QPolynomial::variable(vars, i); };
  QPolyMatrix da = zero_matrix(vars, RationalField{}, 2, 2), db = da;
  da(0, 0) = v(0), da(1, 1) = v(1), db(0, 0) = v(2), db(1, 1) = v(3);
  auto t = tensor_product_matrix(da, db);
  CHECK(t(0, 0).to_string() == "a*c");
  CHECK(t(1, 1).to_string() == "a*d");
  CHECK(t(2, 2).to_string() == "b*c");
  CHECK(t(3, 3).to_string() == "b*d");
  CHECK(t(0, 3).is_zero());

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix a = random_int_matrix(rng, 2, 2), b = random_int_matrix(rng, 2, 2);
    Rational lhs = det_of(numeric(tensor_product_matrix(as_poly(a), as_poly(b))));
    Rational da2 = det_of(a) * det_of(a), db2 = det_of(b) * det_of(b);
    CHECK(lhs == da2 * db2);
  }
}

TEST_CASE("numeric rank examples") {
  auto empty = make_var_table({});
  CHECK(numeric_rank(zero_matrix(empty, RationalField{}, 3, 4)) == 0);
  CHECK(numeric_rank(identity_matrix(empty, RationalField{}, 4)) == 4);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix m = multiply(random_int_matrix(rng, 3, 2), random_int_matrix(rng, 2, 4));
    // Oracle: largest size with a nonvanishing minor.
    std::size_t scan = 0;
    for (std::size_t t = 1; t <= 3; ++t) {
      auto grid = minor_grid(as_poly(m), t);
      bool nonzero = false;
      for (std::size_t i = 0; i < grid.rows(); ++i)
        for (std::size_t j = 0; j < grid.cols(); ++j) nonzero = nonzero || !grid(i, j).is_zero();
      if (nonzero) scan = t;
    }
    CHECK(scan <= 2);
    CHECK(numeric_rank(as_poly(m)) == scan);
  }
  CHECK_THROWS_AS(numeric_rank(generic_matrix(2, 2, "X")), std::domain_error);
}

TEST_CASE("functoriality") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned d = 1 + trial % 3;
    QMatrix a = random_int_matrix(rng, 3, 2, 3), b = random_int_matrix(rng, 2, 3, 3);
    auto pa = as_poly(a), pb = as_poly(b);
    auto ab = multiply(pa, pb);
    CHECK(symmetric_power_matrix(ab, d) == multiply(symmetric_power_matrix(pa, d), symmetric_power_matrix(pb, d)));
    const unsigned e = 1 + trial % 2;
    CHECK(exterior_power_matrix(ab, e) == multiply(exterior_power_matrix(pa, e), exterior_power_matrix(pb, e)));
    QMatrix c = random_int_matrix(rng, 2, 2, 3), dm = random_int_matrix(rng, 2, 2, 3);
    auto pc = as_poly(c), pd = as_poly(dm);
    CHECK(multiply(tensor_product_matrix(pa, pc), tensor_product_matrix(pb, pd)) ==
          tensor_product_matrix(multiply(pa, pb), multiply(pc, pd)));
  }
}

TEST_CASE("determinant of powers") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 1; d <= 3; ++d) {
      QMatrix a = random_int_matrix(rng, n, n);
      const auto s = power_constants(n, d, n).s;
      Integer expected;
      mpz_pow_ui(expected.get_mpz_t(), det_of(a).get_num_mpz_t(), s);
      CHECK(det_of(numeric(symmetric_power_matrix(as_poly(a), d))) == Rational(expected));
    }
  for (std::size_t n = 1; n <= 5; ++n)
    for (unsigned d = 1; d <= std::min<std::size_t>(3, n); ++d) {
      QMatrix a = random_int_matrix(rng, n, n);
      const auto e = power_constants(n, d, n).e;
      Integer expected;
      mpz_pow_ui(expected.get_mpz_t(), det_of(a).get_num_mpz_t(), e);
      CHECK(det_of(numeric(exterior_power_matrix(as_poly(a), d))) == Rational(expected));
    }
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t q = 1; q <= 3; ++q) {
      QMatrix a = random_int_matrix(rng, n, n), b = random_int_matrix(rng, q, q);
      Integer da, db;
      mpz_pow_ui(da.get_mpz_t(), det_of(a).get_num_mpz_t(), q);
      mpz_pow_ui(db.get_mpz_t(), det_of(b).get_num_mpz_t(), n);
      CHECK(det_of(numeric(tensor_product_matrix(as_poly(a), as_poly(b)))) == Rational(da * db));
    }
  // Symbolic instance: det(S^2(X)) = det(X)^3 for a generic 2 x 2 matrix.
  auto x = generic_matrix(2, 2, "X");
  CHECK(determinant(symmetric_power_matrix(x, 2)) == pow(determinant(x), 3));
}

TEST_CASE("rank of symmetric powers and nonvanishing minors") {
  std::mt19937_64 rng(51);
  for (std::size_t r = 1; r <= 2; ++r)
    for (unsigned d = 1; d <= 3; ++d) {
      QMatrix a = random_rank_matrix(rng, 3, 3, r);
      auto s = symmetric_power_matrix(as_poly(a), d);
      const auto bound = power_constants(3, d, r).rank_bound;
      CHECK(numeric_rank(s) == bound);
      if (s.rows() <= 6) {
        for (std::size_t t = 1; t <= s.rows(); ++t) {
          auto grid = minor_grid(s, t);
          bool nonzero = false;
          for (std::size_t i = 0; i < grid.rows(); ++i)
            for (std::size_t j = 0; j < grid.cols(); ++j) nonzero = nonzero || !grid(i, j).is_zero();
          CHECK(nonzero == (t <= bound));
        }
      }
    }
}
