#include "detideal/checks.hpp"

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "detideal/combinatorics.hpp"
#include "detideal/ideal.hpp"
#include "detideal/multilinear.hpp"
#include "detideal/young.hpp"

namespace detideal {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Check context: parameters, seeded randomness, prime sampling, reporting.

class Context {
 public:
  Context(const CheckSpec& spec, const CheckInfo& info, Report& report)
      : spec_(spec), info_(info), report_(report) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32)};
    for (char c : spec.name) words.push_back(static_cast<unsigned char>(c));
    std::seed_seq seq(words.begin(), words.end());
    rng_.seed(seq);
    field_ = spec.field.value_or(info.default_field);
  }

  std::optional<long long> param(const std::string& name) const {
    auto it = spec_.params.find(name);
    if (it != spec_.params.end()) return it->second;
    for (const auto& p : info_.params)
      if (p.name == name) return p.default_value;
    return std::nullopt;
  }
  // Value of a parameter that has a default or was given.
  long long need(const std::string& name) const { return *param(name); }

  std::mt19937_64& rng() { return rng_; }
  FieldMode field() const { return field_; }
  unsigned prime_count() const { return spec_.primes; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // A fresh prime in (2^30, 2^31), distinct from those already used.
  std::uint32_t next_prime() {
    std::uniform_int_distribution<std::uint32_t> start((1u << 30) + 1, (1u << 31) - 1);
    for (;;) {
      mpz_class p = start(rng_);
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      if (p >= (mpz_class(1) << 31)) continue;
      const auto value = static_cast<std::uint32_t>(p.get_ui());
      if (std::find(drawn_.begin(), drawn_.end(), value) != drawn_.end()) continue;
      drawn_.push_back(value);
      return value;
    }
  }
  void record_prime(std::uint32_t p) { report_.primes.push_back(p); }

  void expect(const std::string& key, json value, const char* provenance) {
    report_.expected[key] = json{{"value", std::move(value)}, {"provenance", provenance}};
  }
  void actual(const std::string& key, json value) { report_.actual[key] = std::move(value); }

 private:
  const CheckSpec& spec_;
  const CheckInfo& info_;
  Report& report_;
  std::mt19937_64 rng_;
  FieldMode field_;
  std::vector<std::uint32_t> drawn_;
};

// Runs fn over Q, or over independent random primes. Modular results are
// accepted when all primes agree; otherwise the exact computation decides.
template <class Fn>
json evaluate(Context& ctx, Fn&& fn) {
  if (ctx.field() == FieldMode::exact) return fn(RationalField{});
  std::vector<json> results;
  unsigned bad = 0;
  while (results.size() < ctx.prime_count()) {
    const std::uint32_t p = ctx.next_prime();
    try {
      results.push_back(fn(PrimeField(p)));
      ctx.record_prime(p);
    } catch (const BadPrime&) {
      if (++bad > 16) throw std::runtime_error("too many primes dividing a denominator");
    }
  }
  for (const json& r : results)
    if (r != results.front()) {
      ctx.actual("escalated_to_exact", true);
      return fn(RationalField{});
    }
  return results.front();
}

template <class F>
Polynomial<F> over(const QPolynomial& p, const F& field) {
  if constexpr (std::is_same_v<F, RationalField>)
    return p;
  else
    return reduce_mod_prime(p, field);
}

template <class F>
IdealGens<F> over(const QIdeal& g, const F& field) {
  if constexpr (std::is_same_v<F, RationalField>)
    return g;
  else
    return reduce_mod_prime(g, field);
}

template <class F>
PolyMatrix<F> over(const QPolyMatrix& a, const F& field) {
  if constexpr (std::is_same_v<F, RationalField>)
    return a;
  else
    return reduce_mod_prime(a, field);
}

// ---------------------------------------------------------------------------
// Random inputs.

QMatrix random_matrix(Context& ctx, std::size_t rows, std::size_t cols, int bound = 3) {
  QMatrix a(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = ctx.uniform(-bound, bound);
  return a;
}

QMatrix random_nonsingular(Context& ctx, std::size_t n) {
  for (;;) {
    QMatrix a = random_matrix(ctx, n, n);
    if (sgn(rational_determinant(a)) != 0) return a;
  }
}

// Invertible rational matrix with some non-integral entries.
QMatrix random_invertible_rational(Context& ctx, std::size_t n) {
  for (;;) {
    QMatrix a(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = Rational(ctx.uniform(-3, 3), ctx.uniform(1, 3));
        a(i, j).canonicalize();
      }
    if (sgn(rational_determinant(a)) != 0) return a;
  }
}

// Integer matrix of rank exactly r, as a product of n x r and r x m factors.
QMatrix random_rank_matrix(Context& ctx, std::size_t rows, std::size_t cols, std::size_t r) {
  for (;;) {
    QMatrix a = multiply(random_matrix(ctx, rows, r), random_matrix(ctx, r, cols));
    if (rational_rank(a) == r) return a;
  }
}

QPolyMatrix constant_poly(const QMatrix& a) { return constant_matrix(make_var_table({}), RationalField{}, a); }

QMatrix numeric(const QPolyMatrix& a) { return constant_entries(a); }

std::string str(const Rational& q) { return q.get_str(); }

std::vector<unsigned> random_exponents(Context& ctx, std::size_t n) {
  std::vector<unsigned> a(n);
  for (auto& e : a) e = static_cast<unsigned>(ctx.uniform(0, 3));
  return a;
}

unsigned sum(const std::vector<unsigned>& a) { return std::accumulate(a.begin(), a.end(), 0u); }

std::uint64_t to_u64(long long v) { return static_cast<std::uint64_t>(v); }

// ---------------------------------------------------------------------------
// Determinant identities.

void check_det_sym(Context& ctx) {
  std::vector<std::pair<unsigned, unsigned>> cases;
  for (unsigned n : {2u, 3u, 4u})
    for (unsigned d : {2u, 3u})
      if ((!ctx.param("n") || *ctx.param("n") == n) && (!ctx.param("d") || *ctx.param("d") == d)) cases.emplace_back(n, d);
  if (cases.empty()) cases.emplace_back(to_u64(*ctx.param("n")), to_u64(*ctx.param("d")));
  json expected = json::array(), actual = json::array(), labels = json::array();
  for (int i = 0; i < 20; ++i) {
    auto [n, d] = cases[i % cases.size()];
    const QMatrix a = random_nonsingular(ctx, n);
    const std::uint64_t s = binomial(n + d - 1, d - 1);
    Rational power = 1;
    for (std::uint64_t j = 0; j < s; ++j) power *= rational_determinant(a);
    expected.push_back(str(power));
    actual.push_back(str(determinant(symmetric_power_matrix(constant_poly(a), d)).constant_value()));
    labels.push_back("n=" + std::to_string(n) + " d=" + std::to_string(d) + " s=" + std::to_string(s));
  }
  ctx.expect("determinants", expected, "stated");
  ctx.actual("determinants", actual);
  ctx.actual("cases", labels);
  if (cases.size() == 1) {
    auto [n, d] = cases.front();
    ctx.expect("s", binomial(n + d - 1, d - 1), "derived");
    ctx.actual("s", power_constants(n, d, n).s);
  }
}

void check_det_ext(Context& ctx) {
  std::vector<std::pair<unsigned, unsigned>> cases;
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned d = 1; d <= std::min(n, 3u); ++d)
      if ((!ctx.param("n") || *ctx.param("n") == n) && (!ctx.param("d") || *ctx.param("d") == d)) cases.emplace_back(n, d);
  if (cases.empty()) {
    const long long n = *ctx.param("n"), d = *ctx.param("d");
    if (d > n) throw std::invalid_argument("det-ext needs d <= n");
    cases.emplace_back(to_u64(n), to_u64(d));
  }
  json expected = json::array(), actual = json::array(), labels = json::array();
  for (int i = 0; i < 20; ++i) {
    auto [n, d] = cases[i % cases.size()];
    const QMatrix a = random_nonsingular(ctx, n);
    const std::uint64_t e = binomial(n - 1, d - 1);
    Rational power = 1;
    for (std::uint64_t j = 0; j < e; ++j) power *= rational_determinant(a);
    expected.push_back(str(power));
    actual.push_back(str(determinant(exterior_power_matrix(constant_poly(a), d)).constant_value()));
    labels.push_back("n=" + std::to_string(n) + " d=" + std::to_string(d) + " e=" + std::to_string(e));
  }
  ctx.expect("determinants", expected, "stated");
  ctx.actual("determinants", actual);
  ctx.actual("cases", labels);
}

void check_det_tensor(Context& ctx) {
  std::vector<std::pair<unsigned, unsigned>> cases;
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned q = 1; q <= 3; ++q)
      if ((!ctx.param("n") || *ctx.param("n") == n) && (!ctx.param("q") || *ctx.param("q") == q)) cases.emplace_back(n, q);
  if (cases.empty()) cases.emplace_back(to_u64(*ctx.param("n")), to_u64(*ctx.param("q")));
  json expected = json::array(), actual = json::array(), labels = json::array();
  for (int i = 0; i < 20; ++i) {
    auto [n, q] = cases[i % cases.size()];
    const QMatrix a = random_nonsingular(ctx, n), b = random_nonsingular(ctx, q);
    Rational value = 1;
    for (unsigned j = 0; j < q; ++j) value *= rational_determinant(a);
    for (unsigned j = 0; j < n; ++j) value *= rational_determinant(b);
    expected.push_back(str(value));
    actual.push_back(str(determinant(tensor_product_matrix(constant_poly(a), constant_poly(b))).constant_value()));
    labels.push_back("n=" + std::to_string(n) + " q=" + std::to_string(q));
  }
  ctx.expect("determinants", expected, "stated");
  ctx.actual("determinants", actual);
  ctx.actual("cases", labels);
}

// ---------------------------------------------------------------------------
// Rank law.

constexpr std::uint64_t kMinorScanLimit = 5000;

// Searches the t-minors of a for a nonzero one, visiting at most `limit`.
// Returns true/false when decided, nullopt when the limit was hit.
std::optional<bool> some_nonzero_minor(const QMatrix& a, std::size_t t, std::uint64_t limit) {
  std::uint64_t visited = 0;
  const auto rows = k_subsets(a.rows(), t), cols = k_subsets(a.cols(), t);
  for (const auto& r : rows)
    for (const auto& c : cols) {
      if (++visited > limit) return std::nullopt;
      QMatrix sub(t, t, Rational(0));
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) sub(i, j) = a(r[i], c[j]);
      if (sgn(rational_determinant(sub)) != 0) return true;
    }
  return false;
}

void check_rank_law(Context& ctx) {
  struct Case {
    unsigned n, m, r, d;
  };
  std::vector<Case> cases;
  for (auto [n, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}, {3u, 4u}, {4u, 3u}, {4u, 4u}})
    for (unsigned r = 1; r < std::min(n, m); ++r)
      for (unsigned d = 1; d <= 3; ++d) {
        Case c{n, m, r, d};
        auto match = [&](const char* key, unsigned v) { return !ctx.param(key) || *ctx.param(key) == v; };
        if (match("n", n) && match("m", m) && match("r", r) && match("d", d)) cases.push_back(c);
      }
  if (cases.empty()) {
    for (const char* key : {"n", "m", "r", "d"})
      if (!ctx.param(key)) throw std::invalid_argument("rank-law outside the default family needs n, m, r and d");
    Case c{static_cast<unsigned>(ctx.need("n")), static_cast<unsigned>(ctx.need("m")), static_cast<unsigned>(ctx.need("r")),
           static_cast<unsigned>(ctx.need("d"))};
    if (c.r > std::min(c.n, c.m)) throw std::invalid_argument("rank-law needs r <= min(m, n)");
    cases.push_back(c);
  }
  json expected_rank = json::array(), actual_rank = json::array();
  json expected_nonzero = json::array(), actual_nonzero = json::array(), labels = json::array();
  unsigned exhaustive = 0, by_rank = 0;
  for (const Case& c : cases) {
    const QMatrix a = random_rank_matrix(ctx, c.n, c.m, c.r);
    const QPolyMatrix power = symmetric_power_matrix(constant_poly(a), c.d);
    const std::uint64_t bound = binomial(c.r + c.d - 1, c.d);
    const std::size_t rank = numeric_rank(power);
    expected_rank.push_back(bound);
    actual_rank.push_back(rank);

    // I_t(S^d) is nonzero for t = bound and zero for t = bound + 1 (hence for all larger t).
    const QMatrix values = numeric(power);
    const std::size_t top = std::min(values.rows(), values.cols());
    json expect_case = json::array(), actual_case = json::array();
    for (std::size_t t : {bound, bound + 1}) {
      if (t == 0 || t > top) continue;
      expect_case.push_back(t <= bound);
      auto scanned = some_nonzero_minor(values, t, kMinorScanLimit);
      if (scanned) {
        ++exhaustive;
        actual_case.push_back(*scanned);
      } else {
        ++by_rank;
        actual_case.push_back(t <= rank);
      }
    }
    expected_nonzero.push_back(expect_case);
    actual_nonzero.push_back(actual_case);
    labels.push_back("n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " r=" + std::to_string(c.r) +
                     " d=" + std::to_string(c.d));
  }
  ctx.expect("ranks", expected_rank, "stated");
  ctx.actual("ranks", actual_rank);
  ctx.expect("minor_ideal_nonzero", expected_nonzero, "stated");
  ctx.actual("minor_ideal_nonzero", actual_nonzero);
  ctx.actual("cases", labels);
  ctx.actual("decided_by_minor_scan", exhaustive);
  ctx.actual("decided_by_rank", by_rank);
}

// ---------------------------------------------------------------------------
// Valuations on t-adic diagonal matrices.

std::size_t pick(Context& ctx, const char* key, int lo, int hi) {
  if (auto v = ctx.param(key)) return static_cast<std::size_t>(*v);
  return static_cast<std::size_t>(ctx.uniform(lo, hi));
}

void check_dvr_sym(Context& ctx) {
  json expected = json::array(), actual = json::array(), labels = json::array();
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = pick(ctx, "n", 1, 3), m = ctx.param("m") ? to_u64(*ctx.param("m")) : n + ctx.uniform(0, 1);
    const unsigned d = static_cast<unsigned>(pick(ctx, "d", 1, 3));
    if (m < n) throw std::invalid_argument("dvr-sym needs m >= n");
    const auto a = random_exponents(ctx, n);
    expected.push_back(binomial(n + d - 1, d - 1) * sum(a));
    actual.push_back(min_valuation(maximal_minors(symmetric_power_matrix(dvr_diagonal(a, m), d))));
    labels.push_back(json{{"a", a}, {"m", m}, {"d", d}});
  }
  ctx.expect("valuations", expected, "stated");
  ctx.actual("valuations", actual);
  ctx.actual("cases", labels);
}

void check_dvr_ext(Context& ctx) {
  json expected = json::array(), actual = json::array(), labels = json::array();
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = pick(ctx, "n", 1, 4), m = ctx.param("m") ? to_u64(*ctx.param("m")) : n + ctx.uniform(0, 1);
    const unsigned d = static_cast<unsigned>(pick(ctx, "d", 1, static_cast<int>(std::min<std::size_t>(n, 3))));
    if (m < n || d > n) throw std::invalid_argument("dvr-ext needs d <= n <= m");
    const auto a = random_exponents(ctx, n);
    expected.push_back(binomial(n - 1, d - 1) * sum(a));
    actual.push_back(min_valuation(maximal_minors(exterior_power_matrix(dvr_diagonal(a, m), d))));
    labels.push_back(json{{"a", a}, {"m", m}, {"d", d}});
  }
  ctx.expect("valuations", expected, "stated");
  ctx.actual("valuations", actual);
  ctx.actual("cases", labels);
}

void check_dvr_tensor(Context& ctx) {
  json expected = json::array(), actual = json::array(), labels = json::array();
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = pick(ctx, "n", 1, 3), q = pick(ctx, "q", 1, 2);
    const std::size_t m = ctx.param("m") ? to_u64(*ctx.param("m")) : n + ctx.uniform(0, 1);
    const std::size_t p = ctx.param("p") ? to_u64(*ctx.param("p")) : q + ctx.uniform(0, 1);
    if (m < n || p < q) throw std::invalid_argument("dvr-tensor needs m >= n and p >= q");
    const auto a = random_exponents(ctx, n), b = random_exponents(ctx, q);
    expected.push_back(q * sum(a) + n * sum(b));
    actual.push_back(min_valuation(maximal_minors(tensor_product_matrix(dvr_diagonal(a, m), dvr_diagonal(b, p)))));
    labels.push_back(json{{"a", a}, {"b", b}, {"m", m}, {"p", p}});
  }
  ctx.expect("valuations", expected, "stated");
  ctx.actual("valuations", actual);
  ctx.actual("cases", labels);
}

// ---------------------------------------------------------------------------
// Graded span identities.

// Span equality of two ideals' degree-k components over the chosen field.
json compare_components(Context& ctx, const QIdeal& lhs, const QIdeal& rhs, unsigned k) {
  return evaluate(ctx, [&](const auto& field) {
    auto a = graded_component(over(lhs, field), k);
    auto b = graded_component(over(rhs, field), k);
    return json{{"equal", span_equal(a, b)}, {"rank", a.rank()}};
  });
}

void record_equalities(Context& ctx, const std::vector<std::pair<std::string, json>>& results) {
  json expected = json::object(), actual = json::object(), ranks = json::object();
  for (const auto& [label, r] : results) {
    expected[label] = true;
    actual[label] = r.at("equal");
    ranks[label] = r.at("rank");
  }
  ctx.expect("spans_equal", expected, "stated");
  ctx.actual("spans_equal", actual);
  ctx.actual("component_ranks", ranks);
}

template <std::size_t N>
std::vector<std::array<unsigned, N>> family_or_given(Context& ctx, const std::array<const char*, N>& keys,
                                                     const std::vector<std::array<unsigned, N>>& family) {
  const bool any = std::any_of(keys.begin(), keys.end(), [&](const char* key) { return ctx.param(key).has_value(); });
  if (!any) return family;
  std::array<unsigned, N> given{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!ctx.param(keys[i])) throw std::invalid_argument(std::string("parameter ") + keys[i] + " is required with the others");
    given[i] = static_cast<unsigned>(*ctx.param(keys[i]));
  }
  return {given};
}

void check_thm1_sym(Context& ctx) {
  auto cases = family_or_given<3>(ctx, {"n", "m", "d"}, {{2, 2, 2}, {2, 3, 2}, {2, 3, 3}, {3, 3, 2}});
  std::vector<std::pair<std::string, json>> results;
  for (auto [n, m, d] : cases) {
    if (n > m) throw std::invalid_argument("thm1-sym needs n <= m");
    const QPolyMatrix x = generic_matrix(n, m, "X");
    const unsigned s = static_cast<unsigned>(binomial(n + d - 1, d - 1));
    const QIdeal lhs = maximal_minors(symmetric_power_matrix(x, d));
    const QIdeal rhs = ideal_power(maximal_minors(x), s);
    results.emplace_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d),
                         compare_components(ctx, lhs, rhs, n * s));
  }
  record_equalities(ctx, results);
}

void check_thm1_ext(Context& ctx) {
  auto cases = family_or_given<3>(ctx, {"n", "m", "d"}, {{2, 3, 2}, {3, 4, 2}});
  std::vector<std::pair<std::string, json>> results;
  for (auto [n, m, d] : cases) {
    if (n > m || d > n || d == 0) throw std::invalid_argument("thm1-ext needs 1 <= d <= n <= m");
    const QPolyMatrix x = generic_matrix(n, m, "X");
    const unsigned e = static_cast<unsigned>(binomial(n - 1, d - 1));
    const QIdeal lhs = maximal_minors(exterior_power_matrix(x, d));
    const QIdeal rhs = ideal_power(maximal_minors(x), e);
    results.emplace_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d),
                         compare_components(ctx, lhs, rhs, n * e));
  }
  record_equalities(ctx, results);
}

void check_thm1_tensor(Context& ctx) {
  auto cases = family_or_given<4>(ctx, {"n", "m", "q", "p"}, {{2, 2, 2, 2}, {2, 3, 2, 3}});
  std::vector<std::pair<std::string, json>> results;
  for (auto [n, m, q, p] : cases) {
    if (n > m || q > p) throw std::invalid_argument("thm1-tensor needs n <= m and q <= p");
    auto vars = generic_table({{"X", n, m}, {"Y", q, p}});
    const QPolyMatrix x = generic_matrix(vars, n, m, "X"), y = generic_matrix(vars, q, p, "Y");
    const QIdeal lhs = maximal_minors(tensor_product_matrix(x, y));
    const QIdeal rhs = ideal_product(ideal_power(maximal_minors(x), q), ideal_power(maximal_minors(y), n));
    results.emplace_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + " q=" + std::to_string(q) + " p=" + std::to_string(p),
                         compare_components(ctx, lhs, rhs, 2 * n * q));
  }
  record_equalities(ctx, results);
}

void check_eq_sigma(Context& ctx) {
  const auto m = to_u64(ctx.need("m")), n = to_u64(ctx.need("n"));
  const QPolyMatrix x = generic_matrix(m, n, "X");
  std::vector<std::pair<std::string, json>> results;
  for (const Partition& sigma : {Partition({2, 1}), Partition({2, 2}), Partition({3, 1})}) {
    if (sigma.largest() > std::min(m, n)) continue;
    json r = evaluate(ctx, [&](const auto& field) {
      const auto xf = over(x, field);
      auto lower = i_sigma_lower_component(xf, sigma, sigma.size());
      auto upper = graded_component(i_sigma_upper(xf, sigma), sigma.size());
      return json{{"equal", span_equal(lower, upper)}, {"rank", upper.rank()}};
    });
    results.emplace_back("sigma=" + sigma.to_string(), r);
  }
  record_equalities(ctx, results);
}

// ---------------------------------------------------------------------------
// Young-diagram combinatorics.

json shape_list(const std::vector<Partition>& shapes) {
  json out = json::array();
  for (const Partition& p : shapes) out.push_back(p.compact());
  return out;
}

// Brute-force minimal shapes: products of r distinct degree-d monomials in k
// variables, shapes read off the exponent vectors, minimality by direct
// gamma comparison.
std::vector<std::vector<unsigned>> brute_minimal_shapes(unsigned k, unsigned d, unsigned r) {
  std::vector<std::vector<unsigned>> monomials;
  std::vector<unsigned> e(k, 0);
  std::function<void(unsigned, unsigned)> gen = [&](unsigned var, unsigned left) {
    if (var + 1 == k) {
      e[var] = left;
      monomials.push_back(e);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[var] = v;
      gen(var + 1, left - v);
    }
  };
  gen(0, d);
  if (r > monomials.size()) throw std::invalid_argument("r exceeds the number of degree-d monomials");

  auto gamma = [](const std::vector<unsigned>& s, unsigned j) {
    unsigned g = 0;
    for (unsigned x : s) g += x + 1 > j ? x + 1 - j : 0;
    return g;
  };
  auto below = [&](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    const unsigned top = std::max(a.empty() ? 0 : a.front(), b.empty() ? 0 : b.front());
    for (unsigned j = 1; j <= top; ++j)
      if (gamma(a, j) > gamma(b, j)) return false;
    return true;
  };

  std::vector<std::vector<unsigned>> shapes;
  std::vector<unsigned> total(k, 0);
  std::function<void(std::size_t, unsigned)> choose = [&](std::size_t from, unsigned left) {
    if (left == 0) {
      std::vector<unsigned> shape;
      for (unsigned level = 1;; ++level) {
        unsigned count = 0;
        for (unsigned x : total) count += x >= level;
        if (count == 0) break;
        shape.push_back(count);
      }
      if (std::find(shapes.begin(), shapes.end(), shape) == shapes.end()) shapes.push_back(shape);
      return;
    }
    for (std::size_t i = from; i + left <= monomials.size(); ++i) {
      for (unsigned v = 0; v < k; ++v) total[v] += monomials[i][v];
      choose(i + 1, left - 1);
      for (unsigned v = 0; v < k; ++v) total[v] -= monomials[i][v];
    }
  };
  choose(0, r);

  std::vector<std::vector<unsigned>> minimal;
  for (const auto& s : shapes) {
    bool is_min = true;
    for (const auto& o : shapes)
      if (o != s && below(o, s)) is_min = false;
    if (is_min) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), std::greater<>());
  return minimal;
}

// The nine degree-9 diagrams of the worked example, in figure order.
const std::vector<Partition>& example_diagrams() {
  static const std::vector<Partition> d{
      Partition({3, 1, 1, 1, 1, 1, 1}), Partition({2, 2, 2, 1, 1, 1}), Partition({3, 2, 1, 1, 1, 1}),
      Partition({3, 3, 1, 1, 1}),       Partition({3, 2, 2, 1, 1}),    Partition({2, 2, 2, 2, 1}),
      Partition({3, 3, 2, 1}),          Partition({3, 2, 2, 2}),       Partition({3, 3, 3})};
  return d;
}
// Indices (0-based) of the diagrams whose tableaux generate I_3(S^3(X)).
const std::vector<std::size_t> kExampleMembers{0, 1, 4, 8};

void check_sigma_shapes(Context& ctx) {
  const auto k = static_cast<unsigned>(ctx.need("k")), d = static_cast<unsigned>(ctx.need("d")),
             r = static_cast<unsigned>(ctx.need("r"));
  if (k == 0 || d == 0 || r == 0) throw std::invalid_argument("sigma-shapes needs positive k, d, r");
  const ShapeSet sigma = sigma_min_shapes(k, d, r);
  ctx.actual("sigma", shape_list(sigma.shapes()));
  if (k == 3 && d == 3 && r == 3) {
    ctx.expect("sigma", shape_list({example_diagrams()[0], example_diagrams()[1]}), "stated");
  } else {
    std::vector<Partition> brute;
    for (const auto& s : brute_minimal_shapes(k, d, r)) brute.push_back(Partition(s));
    ctx.expect("sigma", shape_list(brute), "derived");
  }
  json sizes = json::array(), expected_sizes = json::array();
  for (const Partition& p : sigma.shapes()) {
    sizes.push_back(p.size());
    expected_sizes.push_back(r * d);
  }
  ctx.expect("sizes", expected_sizes, "trivial");
  ctx.actual("sizes", sizes);
}

void check_upset_enum(Context& ctx) {
  const ShapeSet sigma = sigma_min_shapes(3, 3, 3);
  const auto up = upset_diagrams(sigma, 9, 3);
  std::vector<Partition> figure = example_diagrams();
  std::sort(figure.begin(), figure.end(), std::greater<>());
  ctx.expect("count", 9, "stated");
  ctx.actual("count", up.size());
  ctx.expect("contains (3,3,3)", true, "stated");
  ctx.actual("contains (3,3,3)", std::find(up.begin(), up.end(), Partition({3, 3, 3})) != up.end());
  ctx.expect("diagrams", shape_list(figure), "stated");
  ctx.actual("diagrams", shape_list(up));
}

// Semistandard tableaux of shape lambda with entries in 1..n, by filling cells.
std::uint64_t count_semistandard(const Partition& lambda, unsigned n) {
  std::vector<std::vector<unsigned>> t;
  for (unsigned s : lambda.parts()) t.emplace_back(s, 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) cells.emplace_back(i, j);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cells.size()) {
      ++count;
      return;
    }
    auto [i, j] = cells[c];
    unsigned lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (unsigned v = lo; v <= n; ++v) {
      t[i][j] = v;
      fill(c + 1);
    }
  };
  fill(0);
  return count;
}

void check_hook_dims(Context& ctx) {
  const auto& diagrams = example_diagrams();
  Integer total = 0;
  json dims = json::array();
  for (std::size_t i : kExampleMembers) {
    const Integer dim = m_sigma_dim(diagrams[i], 3, 3);
    total += dim;
    dims.push_back(dim.get_ui());
  }
  ctx.expect("dimension_sum", 5610, "stated");
  ctx.actual("dimension_sum", total.get_ui());
  ctx.expect("dimensions", json::array({784, 4096, 729, 1}), "derived");
  ctx.actual("dimensions", dims);

  std::uint64_t pairs = 0, agree = 0;
  for (unsigned size = 1; size <= 6; ++size)
    for (const Partition& lambda : partitions_of(size, size))
      for (unsigned n = 1; n <= 4; ++n) {
        ++pairs;
        if (schur_dim(lambda, n) == count_semistandard(lambda, n)) ++agree;
      }
  ctx.expect("tableau_count_agreements", pairs, "derived");
  ctx.actual("tableau_count_agreements", agree);
}

// ---------------------------------------------------------------------------
// Worked example: I_3(S^3(X)) for generic 3 x 3 X.

struct Example {
  QPolyMatrix x = generic_matrix(3, 3, "X");
  QIdeal minors3 = minors(symmetric_power_matrix(x, 3), 3);
};

void check_example_5610(Context& ctx) {
  Example ex;
  json r = evaluate(ctx, [&](const auto& field) { return json(graded_component(over(ex.minors3, field), 9).rank()); });
  ctx.expect("rank", 5610, "stated");
  ctx.actual("rank", r);
}

void check_example_decomposition(Context& ctx) {
  Example ex;
  const auto& diagrams = example_diagrams();
  json r = evaluate(ctx, [&](const auto& field) {
    auto span = graded_component(over(ex.minors3, field), 9);
    json members = json::array(), others = json::array();
    for (const Partition& sigma : diagrams)
      (span.contains(over(doubly_initial_tableau(ex.x, sigma), field)) ? members : others).push_back(sigma.compact());
    const std::size_t before = span.rank();
    for (std::size_t i : kExampleMembers) span.insert(over(doubly_initial_tableau(ex.x, diagrams[i]), field));
    return json{{"members", members}, {"non_members", others}, {"rank_before", before}, {"rank_after", span.rank()}};
  });
  json members = json::array(), others = json::array();
  for (std::size_t i = 0; i < diagrams.size(); ++i)
    (std::find(kExampleMembers.begin(), kExampleMembers.end(), i) != kExampleMembers.end() ? members : others)
        .push_back(diagrams[i].compact());
  ctx.expect("members", members, "stated");
  ctx.actual("members", r.at("members"));
  ctx.expect("non_members", others, "stated");
  ctx.actual("non_members", r.at("non_members"));
  ctx.expect("rank_after", r.at("rank_before"), "derived");
  ctx.actual("rank_after", r.at("rank_after"));
  ctx.expect("rank_before", 5610, "stated");
  ctx.actual("rank_before", r.at("rank_before"));
}

void check_sigma_inclusions(Context& ctx) {
  Example ex;
  const ShapeSet sigma = sigma_min_shapes(3, 3, 3);
  json r = evaluate(ctx, [&](const auto& field) {
    const auto xf = over(ex.x, field);
    using F = std::decay_t<decltype(field)>;
    GradedSpan<F> upper(xf(0, 0).vars(), field, 9);
    for (const Partition& s : sigma.shapes()) upper = span_sum(upper, graded_component(i_sigma_upper(xf, s), 9));
    std::size_t contained = 0;
    for (const auto& g : ex.minors3.generators()) contained += upper.contains(over(g, field));
    auto lower = graded_component(over(ex.minors3, field), 9);
    json tableaux = json::array();
    for (const Partition& s : sigma.shapes()) tableaux.push_back(lower.contains(over(doubly_initial_tableau(ex.x, s), field)));
    return json{{"minors_contained", contained}, {"tableaux_contained", tableaux}, {"upper_rank", upper.rank()}};
  });
  ctx.expect("sigma", shape_list({example_diagrams()[0], example_diagrams()[1]}), "stated");
  ctx.actual("sigma", shape_list(sigma.shapes()));
  ctx.expect("minors_contained", ex.minors3.size(), "trivial");
  ctx.actual("minors_contained", r.at("minors_contained"));
  ctx.expect("tableaux_contained", json::array({true, true}), "stated");
  ctx.actual("tableaux_contained", r.at("tableaux_contained"));
  ctx.actual("upper_rank", r.at("upper_rank"));
}

// ---------------------------------------------------------------------------
// GL stability.

void check_gl_stability(Context& ctx) {
  const auto n = to_u64(ctx.need("n")), m = to_u64(ctx.need("m")), d = to_u64(ctx.need("d")), r = to_u64(ctx.need("r")),
             k = to_u64(ctx.need("k"));
  const QPolyMatrix x = generic_matrix(n, m, "X");
  const QPolyMatrix power = symmetric_power_matrix(x, static_cast<unsigned>(d));
  if (r == 0 || r > std::min(power.rows(), power.cols())) throw std::invalid_argument("gl-stability: r out of range");
  if (k < r * d) throw std::invalid_argument("gl-stability: k below the generating degree r*d");
  const QSpan span = graded_component(minors(power, r), static_cast<unsigned>(k));
  json expected = json::array(), actual = json::array();
  for (int pair = 0; pair < 5; ++pair) {
    GlSubstitution sub(x, random_invertible_rational(ctx, n), random_invertible_rational(ctx, m));
    std::size_t inside = 0;
    for (const auto& row : span.rows()) inside += span.contains(sub.apply(row));
    expected.push_back(span.rank());
    actual.push_back(inside);
  }
  ctx.expect("images_in_span", expected, "stated");
  ctx.actual("images_in_span", actual);
  ctx.actual("span_rank", span.rank());
}

// ---------------------------------------------------------------------------
// Catalog.

using Runner = void (*)(Context&);

struct Entry {
  CheckInfo info;
  Runner run;
};

ParamInfo sweep(const char* name, const char* meaning) { return {name, std::nullopt, meaning}; }
ParamInfo fixed(const char* name, long long v, const char* meaning) { return {name, v, meaning}; }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {{"det-sym", "det S^d(A) = det(A)^s, s = C(n+d-1,d-1), 20 random integer A",
        {sweep("n", "matrix size (default: 2..4)"), sweep("d", "power (default: 2..3)")}, FieldMode::exact, false},
       check_det_sym},
      {{"det-ext", "det Lambda^d(A) = det(A)^e, e = C(n-1,d-1), 20 random integer A",
        {sweep("n", "matrix size (default: 1..5)"), sweep("d", "power (default: 1..min(n,3))")}, FieldMode::exact, false},
       check_det_ext},
      {{"det-tensor", "det(A (x) B) = det(A)^q det(B)^n, 20 random integer pairs",
        {sweep("n", "size of A (default: 1..3)"), sweep("q", "size of B (default: 1..3)")}, FieldMode::exact, false},
       check_det_tensor},
      {{"rank-law", "rank S^d(A) = C(r+d-1,d) for rank-r A; I_t(S^d A) != 0 iff t <= C(r+d-1,d)",
        {sweep("n", "rows"), sweep("m", "columns"), sweep("r", "rank"), sweep("d", "power")}, FieldMode::exact, false},
       check_rank_law},
      {{"dvr-sym", "valuation of I(S^d(diag t^a)) = s * sum(a), 20 random exponent lists",
        {sweep("n", "rows (default: random 1..3)"), sweep("m", "columns (default: n or n+1)"), sweep("d", "power (default: random 1..3)")},
        FieldMode::exact, false},
       check_dvr_sym},
      {{"dvr-ext", "valuation of I(Lambda^d(diag t^a)) = e * sum(a), 20 random exponent lists",
        {sweep("n", "rows (default: random 1..4)"), sweep("m", "columns (default: n or n+1)"), sweep("d", "power (default: random)")},
        FieldMode::exact, false},
       check_dvr_ext},
      {{"dvr-tensor", "valuation of I(diag t^a (x) diag t^b) = q*sum(a) + n*sum(b), 20 random pairs",
        {sweep("n", "rows of the first factor"), sweep("m", "columns of the first factor"), sweep("q", "rows of the second factor"),
         sweep("p", "columns of the second factor")},
        FieldMode::exact, false},
       check_dvr_tensor},
      {{"thm1-sym", "degree-ns components of I(S^d X) and I(X)^s agree on generic n x m X",
        {sweep("n", "rows"), sweep("m", "columns"), sweep("d", "power")}, FieldMode::exact, true},
       check_thm1_sym},
      {{"thm1-ext", "generating-degree components of I(Lambda^d X) and I(X)^e agree",
        {sweep("n", "rows"), sweep("m", "columns"), sweep("d", "power")}, FieldMode::exact, true},
       check_thm1_ext},
      {{"thm1-tensor", "generating-degree components of I(X (x) Y) and I(X)^q I(Y)^n agree",
        {sweep("n", "rows of X"), sweep("m", "columns of X"), sweep("q", "rows of Y"), sweep("p", "columns of Y")}, FieldMode::exact,
        true},
       check_thm1_tensor},
      {{"eq-sigma", "degree-|sigma| components of I^(sigma) and I^sigma agree for sigma in (2,1),(2,2),(3,1)",
        {fixed("m", 3, "rows"), fixed("n", 3, "columns")}, FieldMode::exact, true},
       check_eq_sigma},
      {{"sigma-shapes", "minimal shapes of the monomials generating I_r(S^d(Y)), Y diagonal k x k",
        {fixed("k", 3, "number of diagonal variables"), fixed("d", 3, "power"), fixed("r", 3, "minor size")}, FieldMode::exact, false},
       check_sigma_shapes},
      {{"upset-enum", "degree-9 diagrams with parts <= 3 above the minimal shapes", {}, FieldMode::exact, false}, check_upset_enum},
      {{"hook-dims", "M_sigma dimensions of the example sum to 5610; hook-content vs tableau counts", {}, FieldMode::exact, false},
       check_hook_dims},
      {{"example-5610", "rank of the degree-9 component of I_3(S^3 X), X generic 3 x 3", {}, FieldMode::modular, true},
       check_example_5610},
      {{"example-decomposition", "which doubly initial tableaux of the nine diagrams lie in I_3(S^3 X)", {}, FieldMode::modular, true},
       check_example_decomposition},
      {{"gl-stability", "X -> A X B^-1 maps the degree-k component of I_r(S^d X) into itself, 5 random pairs",
        {fixed("n", 2, "rows"), fixed("m", 3, "columns"), fixed("d", 2, "power"), fixed("r", 2, "minor size"),
         fixed("k", 6, "degree of the component")},
        FieldMode::exact, false},
       check_gl_stability},
      {{"sigma-inclusions", "I_3(S^3 X) lies in the sum of I^sigma over the minimal shapes; their tableaux lie in I_3(S^3 X)", {},
        FieldMode::modular, true},
       check_sigma_inclusions},
  };
  return e;
}

const Entry& entry(const std::string& name) {
  for (const Entry& e : entries())
    if (e.info.name == name) return e;
  throw std::invalid_argument("unknown check: " + name);
}

std::string pad(const std::string& s, std::size_t width) { return s.size() >= width ? s : s + std::string(width - s.size(), ' '); }

}  // namespace

FieldMode parse_field_mode(const std::string& text) {
  if (text == "exact") return FieldMode::exact;
  if (text == "modular") return FieldMode::modular;
  throw std::invalid_argument("field must be exact or modular: " + text);
}

std::string to_string(FieldMode mode) { return mode == FieldMode::exact ? "exact" : "modular"; }

ReportFormat parse_report_format(const std::string& text) {
  if (text == "json") return ReportFormat::json;
  if (text == "text") return ReportFormat::text;
  throw std::invalid_argument("format must be json or text: " + text);
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CheckInfo& check_info(const std::string& name) { return entry(name).info; }

Report run_check(const CheckSpec& spec) {
  const Entry& e = entry(spec.name);
  for (const auto& [key, value] : spec.params) {
    const bool known = std::any_of(e.info.params.begin(), e.info.params.end(), [&](const ParamInfo& p) { return p.name == key; });
    if (!known) throw std::invalid_argument("check " + spec.name + " does not take parameter " + key);
    if (value < 1 || value > 64) throw std::invalid_argument("parameter " + key + " must lie in 1..64");
  }
  if (spec.field == FieldMode::modular && !e.info.modular_supported)
    throw std::invalid_argument("check " + spec.name + " has no modular backend");
  if (spec.primes == 0) throw std::invalid_argument("at least one prime is required");

  Report report;
  report.name = spec.name;
  report.seed = spec.seed;
  for (const ParamInfo& p : e.info.params) {
    auto it = spec.params.find(p.name);
    if (it != spec.params.end())
      report.params[p.name] = it->second;
    else if (p.default_value)
      report.params[p.name] = *p.default_value;
  }

  Context ctx(spec, e.info, report);
  const auto start = std::chrono::steady_clock::now();
  e.run(ctx);
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  report.pass = expectations_met(report);
  return report;
}

bool expectations_met(const Report& report) {
  if (report.expected.empty()) return false;
  for (const auto& [key, exp] : report.expected.items())
    if (!report.actual.contains(key) || report.actual.at(key) != exp.at("value")) return false;
  return true;
}

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    json out;
    out["name"] = r.name;
    out["params"] = r.params;
    out["expected"] = r.expected;
    out["actual"] = r.actual;
    out["pass"] = r.pass;
    out["runtime_ms"] = std::round(r.runtime_ms * 1000) / 1000;
    out["primes"] = r.primes;
    out["seed"] = r.seed;
    return out.dump();
  }

  std::ostringstream os;
  os << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(1) << r.runtime_ms << " ms)\n";
  std::string params;
  for (const auto& [key, value] : r.params.items()) params += (params.empty() ? "" : " ") + key + "=" + value.dump();
  os << "  params:   " << (params.empty() ? "(none)" : params) << "\n";
  os << "  seed:     " << r.seed << "\n";
  std::string primes;
  for (auto p : r.primes) primes += (primes.empty() ? "" : " ") + std::to_string(p);
  os << "  primes:   " << (primes.empty() ? "(exact)" : primes) << "\n";

  std::size_t width = 8;
  for (const auto& [key, _] : r.actual.items()) width = std::max(width, key.size());
  for (const auto& [key, exp] : r.expected.items()) {
    const bool ok = r.actual.contains(key) && r.actual[key] == exp.at("value");
    os << "  " << (ok ? "ok  " : "MISS") << " " << pad(key, width) << "  [" << exp.at("provenance").get<std::string>() << "]\n";
    os << "       " << pad("", width) << "  expected " << exp.at("value").dump() << "\n";
    os << "       " << pad("", width) << "  actual   " << (r.actual.contains(key) ? r.actual[key].dump() : "(missing)") << "\n";
  }
  for (const auto& [key, value] : r.actual.items())
    if (!r.expected.contains(key)) os << "  info " << pad(key, width) << "  " << value.dump() << "\n";
  return os.str();
}

}  // namespace detideal
