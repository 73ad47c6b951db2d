#pragma once

// Coefficient fields. A field object is a small context value; elements are
// plain values whose arithmetic goes through the context.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace detideal {

using Rational = mpq_class;
using Integer = mpz_class;

// Raised when a prime divides a denominator; callers resample the prime.
class BadPrime : public std::runtime_error {
 public:
  explicit BadPrime(const std::string& what) : std::runtime_error(what) {}
};

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_rational(const Rational& q) const { return q; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  // a -= b * c
  void sub_mul(Element& a, const Element& b, const Element& c) const { a -= b * c; }

  std::size_t hash(const Element& a) const {
    return mpz_get_ui(a.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL ^ mpz_get_ui(a.get_den_mpz_t()) ^
           static_cast<std::size_t>(sgn(a) + 1);
  }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
  bool exact() const { return true; }

  bool operator==(const RationalField&) const { return true; }
};

class PrimeField {
 public:
  using Element = std::uint32_t;

  // p must be an odd prime below 2^32.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  // Throws BadPrime when p divides the denominator.
  Element from_rational(const Rational& q) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(std::uint64_t(a) + p_ - b); }
  Element mul(Element a, Element b) const { return static_cast<Element>(std::uint64_t(a) * b % p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  void sub_mul(Element& a, Element b, Element c) const { a = sub(a, mul(b, c)); }

  std::size_t hash(Element a) const { return a; }
  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  bool exact() const { return false; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace detideal
