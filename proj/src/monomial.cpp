#include "detideal/monomial.hpp"

#include <stdexcept>

#include "detideal/combinatorics.hpp"

namespace detideal {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

std::optional<std::size_t> VarTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarTablePtr make_var_table(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {
constexpr unsigned kMaxDegree = 0xFFFF;
}

Monomial::Monomial(std::span<const unsigned> exponents) {
  exps_.reserve(exponents.size());
  for (unsigned e : exponents) {
    if (e > kMaxDegree) throw std::overflow_error("exponent too large");
    exps_.push_back(static_cast<Exponent>(e));
    degree_ += e;
  }
  if (degree_ > kMaxDegree) throw std::overflow_error("monomial degree too large");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  if (index >= nvars) throw std::out_of_range("variable index");
  if (power > kMaxDegree) throw std::overflow_error("exponent too large");
  Monomial m(nvars);
  m.exps_[index] = static_cast<Exponent>(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.exps_.size() != exps_.size()) throw std::invalid_argument("monomial size mismatch");
  if (degree_ + o.degree_ > kMaxDegree) throw std::overflow_error("monomial degree too large");
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial does not divide");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::with_leading(std::span<const unsigned> leading) const {
  Monomial r;
  r.exps_.reserve(leading.size() + exps_.size());
  r.degree_ = degree_;
  for (unsigned e : leading) {
    r.exps_.push_back(static_cast<Exponent>(e));
    r.degree_ += e;
  }
  r.exps_.insert(r.exps_.end(), exps_.begin(), exps_.end());
  return r;
}

Monomial Monomial::drop_leading(std::size_t count) const {
  Monomial r;
  r.exps_.assign(exps_.begin() + static_cast<std::ptrdiff_t>(count), exps_.end());
  for (Exponent e : r.exps_) r.degree_ += e;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ <=> o.degree_;
  const std::size_t n = std::min(exps_.size(), o.exps_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (exps_[i] != o.exps_[i]) return exps_[i] <=> o.exps_[i];
  return exps_.size() <=> o.exps_.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Monomial::to_string(const VarTable& vars) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

namespace {

void enumerate(std::size_t pos, unsigned remaining, std::vector<unsigned>& cur,
               std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(std::span<const unsigned>(cur));
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate(pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (k == 0) out.emplace_back(0);
    return out;
  }
  out.reserve(static_cast<std::size_t>(count_monomials(nvars, k)));
  std::vector<unsigned> cur(nvars, 0);
  enumerate(0, k, cur, out);
  return out;
}

std::uint64_t count_monomials(std::size_t nvars, unsigned k) {
  if (nvars == 0) return k == 0 ? 1 : 0;
  return binomial(nvars + k - 1, k);
}

}  // namespace detideal
