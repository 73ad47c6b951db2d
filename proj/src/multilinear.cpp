#include "detideal/multilinear.hpp"

namespace detideal {

PowerBasisIndex symmetric_basis(std::size_t n, unsigned d) {
  PowerBasisIndex b{PowerKind::symmetric, d, n, multidegrees(n, d)};
  return b;
}

PowerBasisIndex exterior_basis(std::size_t n, unsigned d) {
  PowerBasisIndex b{PowerKind::exterior, d, n, {}};
  for (const IndexSet& s : k_subsets(n, d)) b.entries.emplace_back(s.begin(), s.end());
  return b;
}

PowerConstants power_constants(std::uint64_t n, std::uint64_t d, std::uint64_t r) {
  if (n == 0 || d == 0) throw std::invalid_argument("power constants need n, d >= 1");
  return {binomial(n + d - 1, d - 1), binomial(n - 1, d - 1), binomial(r + d - 1, d)};
}

std::string generic_name(const std::string& tag, std::size_t i, std::size_t j) {
  return tag + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

VarTablePtr generic_table(const std::vector<MatrixFamily>& families) {
  std::vector<std::string> names;
  for (const MatrixFamily& f : families)
    for (std::size_t i = 0; i < f.rows; ++i)
      for (std::size_t j = 0; j < f.cols; ++j) names.push_back(generic_name(f.tag, i, j));
  return make_var_table(std::move(names));
}

QPolyMatrix generic_matrix(const VarTablePtr& vars, std::size_t rows, std::size_t cols, const std::string& tag) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("generic matrix needs positive dimensions");
  QPolyMatrix out = zero_matrix(vars, RationalField{}, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      auto idx = vars->index_of(generic_name(tag, i, j));
      if (!idx) throw std::invalid_argument("variable table lacks " + generic_name(tag, i, j));
      out(i, j) = QPolynomial::variable(vars, *idx);
    }
  return out;
}

QPolyMatrix generic_matrix(std::size_t rows, std::size_t cols, const std::string& tag) {
  return generic_matrix(generic_table({{tag, rows, cols}}), rows, cols, tag);
}

QPolyMatrix diagonal_indeterminate_matrix(std::size_t k, const std::string& tag) {
  if (k == 0) throw std::invalid_argument("diagonal matrix needs k >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(tag + std::to_string(i + 1));
  auto vars = make_var_table(std::move(names));
  QPolyMatrix out = zero_matrix(vars, RationalField{}, k, k);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = QPolynomial::variable(vars, i);
  return out;
}

QPolyMatrix dvr_diagonal(const std::vector<unsigned>& exponents, std::size_t m) {
  const std::size_t n = exponents.size();
  if (n == 0 || m < n) throw std::invalid_argument("dvr_diagonal needs 1 <= n <= m");
  auto vars = make_var_table({"t"});
  QPolyMatrix out = zero_matrix(vars, RationalField{}, n, m);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = QPolynomial::variable(vars, 0, exponents[i]);
  return out;
}

}  // namespace detideal
