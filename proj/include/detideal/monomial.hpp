#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace detideal {

// Ordered list of indeterminate names. The order is the variable order used
// by every monomial comparison.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VarTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_var_table(std::vector<std::string> names);

// Tables are compatible when they are the same object or list the same names.
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

// Exponent vector with cached total degree. Ordered graded-lexicographically:
// higher degree first, ties broken by the exponent of the earliest variable.
class Monomial {
 public:
  using Exponent = std::uint16_t;
  using Exponents = boost::container::small_vector<Exponent, 16>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const Exponents& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // *this / divisor; throws unless divisor divides *this.
  Monomial divide(const Monomial& divisor) const;

  // Prepends exponents for new leading variables.
  Monomial with_leading(std::span<const unsigned> leading) const;
  Monomial drop_leading(std::size_t count) const;

  bool operator==(const Monomial& o) const { return degree_ == o.degree_ && exps_ == o.exps_; }
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::size_t hash() const;
  std::string to_string(const VarTable& vars) const;

 private:
  Exponents exps_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of total degree k in n variables, in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k);

// Number of monomials of degree k in n variables, C(n+k-1, k).
std::uint64_t count_monomials(std::size_t nvars, unsigned k);

}  // namespace detideal
