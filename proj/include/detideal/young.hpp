#pragma once

// Young diagrams: the gamma functions and the order they induce, shapes of
// monomials, Schur module dimensions, and the minimal shape sets of diagonal
// determinantal ideals.

#include <compare>
#include <string>
#include <vector>

#include "detideal/field.hpp"
#include "detideal/monomial.hpp"

namespace detideal {

// Non-increasing sequence of positive integers s_1 >= ... >= s_u.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  // Sorts and drops zero entries.
  static Partition from_unsorted(std::vector<unsigned> values);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned size() const { return size_; }
  unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }

  // sum_i max(0, s_i - j + 1), for j >= 1.
  unsigned gamma(unsigned j) const;
  // gamma_1 .. gamma_{largest}.
  std::vector<unsigned> gamma_vector() const;

  Partition conjugate() const;

  // "(3,1,1)"; compact() writes repeated parts as "(3,1^2)".
  std::string to_string() const;
  std::string compact() const;

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned size_ = 0;
};

// sigma <= tau iff gamma_j(sigma) <= gamma_j(tau) for every j.
bool leq(const Partition& sigma, const Partition& tau);

// Parses "(3,1^6)" or "3,1,1"; throws std::invalid_argument on malformed text.
Partition parse_partition(const std::string& text);

// Shape of a nonconstant monomial: s_i counts the variables with exponent >= i.
Partition shape_of_monomial(const Monomial& f);

// Dimension of the Schur module of shape lambda over an n-dimensional space
// (hook-content formula). Zero when lambda has more than n rows.
Integer schur_dim(const Partition& lambda, unsigned n);

// dim M_sigma inside K[X] for an m x n generic X. Diagrams here are bounded in
// their number of columns, so the formula is applied to the conjugate.
Integer m_sigma_dim(const Partition& sigma, unsigned m, unsigned n);

// Partitions of k with parts <= max_part, in descending lexicographic order.
std::vector<Partition> partitions_of(unsigned k, unsigned max_part);

// Antichain in the gamma order, sorted descending lexicographically.
class ShapeSet {
 public:
  ShapeSet() = default;
  // Keeps the minimal elements of the given shapes.
  static ShapeSet minimal_of(std::vector<Partition> shapes);

  const std::vector<Partition>& shapes() const { return shapes_; }
  std::size_t size() const { return shapes_.size(); }
  bool contains(const Partition& p) const;
  // True iff some element is <= p.
  bool dominated_by(const Partition& p) const;

  bool operator==(const ShapeSet&) const = default;

 private:
  std::vector<Partition> shapes_;
};

// Partitions of k with parts <= max_part lying above some element of the set.
std::vector<Partition> upset_diagrams(const ShapeSet& set, unsigned k, unsigned max_part);

// Minimal shapes among the monomials generating I_r(S^d(Y)) for Y = diag(Y_1..Y_k),
// i.e. products of r distinct degree-d monomials in k variables.
ShapeSet sigma_min_shapes(unsigned k, unsigned d, unsigned r);

}  // namespace detideal
