#include "detideal/young.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "detideal/combinatorics.hpp"

namespace detideal {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<unsigned> values) {
  std::erase(values, 0U);
  std::sort(values.begin(), values.end(), std::greater<>());
  return Partition(std::move(values));
}

unsigned Partition::gamma(unsigned j) const {
  if (j == 0) throw std::invalid_argument("gamma index starts at 1");
  unsigned g = 0;
  for (unsigned s : parts_)
    if (s + 1 > j) g += s + 1 - j;
  return g;
}

std::vector<unsigned> Partition::gamma_vector() const {
  std::vector<unsigned> g;
  for (unsigned j = 1; j <= largest(); ++j) g.push_back(gamma(j));
  return g;
}

Partition Partition::conjugate() const {
  std::vector<unsigned> c(largest(), 0);
  for (unsigned s : parts_)
    for (unsigned j = 0; j < s; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string Partition::compact() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

bool leq(const Partition& sigma, const Partition& tau) {
  const unsigned top = std::max(sigma.largest(), tau.largest());
  for (unsigned j = 1; j <= top; ++j)
    if (sigma.gamma(j) > tau.gamma(j)) return false;
  return true;
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(pos, end - pos);
    std::size_t caret = item.find('^');
    try {
      std::size_t used = 0;
      unsigned value = static_cast<unsigned>(std::stoul(item.substr(0, caret), &used));
      if (used != (caret == std::string::npos ? item.size() : caret)) throw std::invalid_argument(item);
      unsigned reps = 1;
      if (caret != std::string::npos) {
        std::string r = item.substr(caret + 1);
        reps = static_cast<unsigned>(std::stoul(r, &used));
        if (used != r.size()) throw std::invalid_argument(item);
      }
      parts.insert(parts.end(), reps, value);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed partition: " + text);
    }
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

Partition shape_of_monomial(const Monomial& f) {
  if (f.is_one()) throw std::invalid_argument("shape of a constant monomial");
  std::vector<unsigned> exps(f.exponents().begin(), f.exponents().end());
  return Partition::from_unsorted(std::move(exps)).conjugate();
}

Integer schur_dim(const Partition& lambda, unsigned n) {
  if (lambda.length() > n) return 0;
  const Partition conj = lambda.conjugate();
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (unsigned j = 0; j < lambda.parts()[i]; ++j) {
      num *= static_cast<long>(n) + static_cast<long>(j) - static_cast<long>(i);
      den *= (lambda.parts()[i] - j) + (conj.parts()[j] - static_cast<unsigned>(i)) - 1;
    }
  }
  return num / den;
}

Integer m_sigma_dim(const Partition& sigma, unsigned m, unsigned n) {
  if (sigma.largest() > std::min(m, n)) throw std::invalid_argument("diagram has more than min(m,n) columns");
  const Partition c = sigma.conjugate();
  return schur_dim(c, m) * schur_dim(c, n);
}

namespace {

void partitions_rec(unsigned remaining, unsigned bound, std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned p = std::min(remaining, bound); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned k, unsigned max_part) {
  std::vector<Partition> out;
  if (k > 0 && max_part == 0) return out;
  std::vector<unsigned> cur;
  partitions_rec(k, max_part, cur, out);
  return out;
}

ShapeSet ShapeSet::minimal_of(std::vector<Partition> shapes) {
  std::sort(shapes.begin(), shapes.end(), std::greater<>());
  shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
  ShapeSet s;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < shapes.size() && minimal; ++j)
      if (j != i && leq(shapes[j], shapes[i])) minimal = false;
    if (minimal) s.shapes_.push_back(shapes[i]);
  }
  return s;
}

bool ShapeSet::contains(const Partition& p) const {
  return std::find(shapes_.begin(), shapes_.end(), p) != shapes_.end();
}

bool ShapeSet::dominated_by(const Partition& p) const {
  return std::any_of(shapes_.begin(), shapes_.end(), [&](const Partition& s) { return leq(s, p); });
}

std::vector<Partition> upset_diagrams(const ShapeSet& set, unsigned k, unsigned max_part) {
  std::vector<Partition> out;
  for (Partition& p : partitions_of(k, max_part))
    if (set.dominated_by(p)) out.push_back(std::move(p));
  return out;
}

ShapeSet sigma_min_shapes(unsigned k, unsigned d, unsigned r) {
  if (k == 0 || d == 0 || r == 0) throw std::invalid_argument("sigma_min_shapes needs k, d, r >= 1");
  const auto monos = multidegrees(k, d);
  if (r > monos.size()) throw std::invalid_argument("minor size exceeds the size of S^d(Y); the ideal is zero");
  if (binomial(monos.size(), r) > 100'000'000ULL) throw std::length_error("too many generators to enumerate");

  std::set<Partition> shapes;
  std::vector<unsigned> acc(k, 0);
  // Choose r distinct monomials in index order.
  auto rec = [&](auto&& self, std::size_t start, unsigned left) -> void {
    if (left == 0) {
      shapes.insert(Partition::from_unsorted(acc).conjugate());
      return;
    }
    for (std::size_t i = start; i + left <= monos.size(); ++i) {
      for (std::size_t v = 0; v < k; ++v) acc[v] += monos[i][v];
      self(self, i + 1, left - 1);
      for (std::size_t v = 0; v < k; ++v) acc[v] -= monos[i][v];
    }
  };
  rec(rec, 0, r);
  return ShapeSet::minimal_of(std::vector<Partition>(shapes.begin(), shapes.end()));
}

}  // namespace detideal
