#include "detideal/field.hpp"

namespace detideal {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0)
    throw std::invalid_argument("not an odd prime: " + std::to_string(p));
}

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
  const Integer pz(p_);
  Integer den = q.get_den() % pz;
  if (den == 0) throw BadPrime("prime " + std::to_string(p_) + " divides a denominator");
  Integer num = q.get_num() % pz;
  if (num < 0) num += pz;
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  Integer r = num * den_inv % pz;
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

}  // namespace detideal
