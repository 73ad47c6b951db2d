#pragma once

// Exact determinants, minors and ranks.
//
// Symbolic matrices go through Laplace expansion memoized over column subsets
// (no division, so it works over any coefficient ring). Numeric matrices may
// use fraction-free elimination instead; both routes must agree.

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "detideal/combinatorics.hpp"
#include "detideal/matrix.hpp"

namespace detideal {

Integer bareiss_determinant(ZMatrix a);
std::size_t integer_rank(ZMatrix a);

// Scales each row to integers; `scale` receives the product of the row multipliers.
ZMatrix clear_denominators(const QMatrix& a, Rational& scale);

Rational rational_determinant(const QMatrix& a);
std::size_t rational_rank(const QMatrix& a);

PrimeField::Element prime_determinant(Matrix<PrimeField::Element> a, const PrimeField& field);
std::size_t prime_rank(Matrix<PrimeField::Element> a, const PrimeField& field);

namespace detail {

inline std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

inline std::unordered_map<std::uint64_t, std::size_t> subset_index(const std::vector<IndexSet>& subsets) {
  std::unordered_map<std::uint64_t, std::size_t> idx;
  idx.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::uint64_t mask = 0;
    for (std::size_t e : subsets[i]) mask |= bit(e);
    idx.emplace(mask, i);
  }
  return idx;
}

}  // namespace detail

template <class F>
Polynomial<F> determinant_laplace(const PolyMatrix<F>& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (n > 30) throw std::invalid_argument("Laplace determinant limited to 30 columns");
  const VarTablePtr& vars = a(0, 0).vars();
  const F& field = a(0, 0).field();

  // level[mask] = minor on rows 0..k-1 and the columns in mask (|mask| = k).
  std::unordered_map<std::uint64_t, Polynomial<F>> level;
  level.emplace(0, Polynomial<F>::constant(vars, field, field.one()));
  for (std::size_t k = 0; k < n; ++k) {
    std::unordered_map<std::uint64_t, Polynomial<F>> next;
    for (const auto& [mask, minor] : level) {
      if (minor.is_zero()) continue;
      // Append column c of row k; the sign counts columns of mask above c.
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & detail::bit(c)) continue;
        const Polynomial<F>& entry = a(k, c);
        if (entry.is_zero()) continue;
        std::size_t above = static_cast<std::size_t>(__builtin_popcountll(mask >> c));
        Polynomial<F> prod = entry * minor;
        auto [it, inserted] = next.try_emplace(mask | detail::bit(c), vars, field);
        if (above % 2 == 0)
          it->second += prod;
        else
          it->second -= prod;
      }
    }
    level = std::move(next);
  }
  auto it = level.find(detail::bit(n) - 1);
  return it == level.end() ? Polynomial<F>(vars, field) : it->second;
}

template <class F>
Polynomial<F> determinant_elimination(const PolyMatrix<F>& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) throw std::invalid_argument("determinant of an empty matrix");
  const VarTablePtr& vars = a(0, 0).vars();
  const F& field = a(0, 0).field();
  auto values = constant_entries(a);
  if constexpr (std::is_same_v<F, RationalField>) {
    return Polynomial<F>::constant(vars, field, rational_determinant(values));
  } else {
    return Polynomial<F>::constant(vars, field, prime_determinant(values, field));
  }
}

template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() > 0 && is_numeric(a)) return determinant_elimination(a);
  return determinant_laplace(a);
}

namespace detail {

struct MaskPairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
  }
};

inline IndexSet mask_indices(std::uint64_t mask) {
  IndexSet out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

}  // namespace detail

template <class F>
struct MinorEntry {
  IndexSet rows;
  IndexSet cols;
  Polynomial<F> value;
};

// Every nonzero t x t minor, ordered lexicographically by (row subset, column
// subset). Built row by row: a k-minor on rows R u {l} (l > max R) expands
// along row l, and only nonzero minors are stored, so sparse matrices stay cheap.
template <class F>
std::vector<MinorEntry<F>> nonzero_minors(const PolyMatrix<F>& a, std::size_t t) {
  if (t == 0 || t > std::min(a.rows(), a.cols())) throw std::invalid_argument("minor size out of range");
  if (a.rows() > 64 || a.cols() > 64) throw std::invalid_argument("minor enumeration limited to 64 rows and columns");
  const VarTablePtr& vars = a(0, 0).vars();
  const F& field = a(0, 0).field();
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  using Level = std::unordered_map<Key, Polynomial<F>, detail::MaskPairHash>;

  Level prev;
  prev.emplace(Key{0, 0}, Polynomial<F>::constant(vars, field, field.one()));
  for (std::size_t k = 1; k <= t; ++k) {
    // Rows of a k-subset that can still grow to t rows stay below this bound.
    const std::size_t row_limit = a.rows() - (t - k);
    Level cur;
    for (const auto& [key, sub] : prev) {
      const std::size_t first_row = key.first == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(key.first));
      for (std::size_t l = first_row; l < row_limit; ++l)
        for (std::size_t c = 0; c < a.cols(); ++c) {
          if (key.second & detail::bit(c)) continue;
          const Polynomial<F>& entry = a(l, c);
          if (entry.is_zero()) continue;
          // Column c sits at position j of the new column set: sign (-1)^{(k-1)+j}.
          const auto j = static_cast<std::size_t>(__builtin_popcountll(key.second & (detail::bit(c) - 1)));
          const Key target{key.first | detail::bit(l), key.second | detail::bit(c)};
          auto it = cur.try_emplace(target, vars, field).first;
          if ((k - 1 + j) % 2 == 0)
            it->second += entry * sub;
          else
            it->second -= entry * sub;
        }
    }
    std::erase_if(cur, [](const auto& kv) { return kv.second.is_zero(); });
    prev = std::move(cur);
  }

  std::vector<MinorEntry<F>> out;
  out.reserve(prev.size());
  for (auto& [key, value] : prev) out.push_back({detail::mask_indices(key.first), detail::mask_indices(key.second), std::move(value)});
  std::sort(out.begin(), out.end(), [](const MinorEntry<F>& x, const MinorEntry<F>& y) {
    return std::tie(x.rows, x.cols) < std::tie(y.rows, y.cols);
  });
  return out;
}

// All t x t minors; entry (I, J) is the minor on the I-th row t-subset and the
// J-th column t-subset, both in lexicographic subset order.
template <class F>
PolyMatrix<F> minor_grid(const PolyMatrix<F>& a, std::size_t t) {
  auto entries = nonzero_minors(a, t);
  const auto rows = k_subsets(a.rows(), t), cols = k_subsets(a.cols(), t);
  const auto row_idx = detail::subset_index(rows), col_idx = detail::subset_index(cols);
  auto mask = [](const IndexSet& s) {
    std::uint64_t m = 0;
    for (std::size_t e : s) m |= detail::bit(e);
    return m;
  };
  PolyMatrix<F> grid(rows.size(), cols.size(), Polynomial<F>(a(0, 0).vars(), a(0, 0).field()));
  for (auto& e : entries) grid(row_idx.at(mask(e.rows)), col_idx.at(mask(e.cols))) = std::move(e.value);
  return grid;
}

}  // namespace detideal
