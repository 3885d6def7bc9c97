#include "trb/field.hpp"

namespace trb {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
}

PrimeField::Element PrimeField::from_mpz(const mpz_class &v) const {
  mpz_class r = v % p_;
  if (r < 0)
    r += p_;
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0)
    throw Error("division by zero in " + name());
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0)
    t += p_;
  return static_cast<Element>(t);
}

std::string PrimeField::to_string(Element a) const {
  if (a > p_ / 2)
    return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

} // namespace trb
