#pragma once

// Coefficient fields: the rationals (GMP) and prime fields GF(p), p < 2^31.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace trb {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// GF(p) with residues kept in [0, p).
class PrimeField {
public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_mpz(const mpz_class &v) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t(a) + p_ - b);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::string to_string(Element a) const;
  std::string name() const { return "Fp:" + std::to_string(p_); }

private:
  std::uint32_t p_;
};

class RationalField {
public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(mpz_class(std::to_string(v))); }
  Element from_mpz(const mpz_class &v) const { return Element(v); }

  bool is_zero(const Element &a) const { return sgn(a) == 0; }
  bool is_one(const Element &a) const { return a == 1; }
  bool equal(const Element &a, const Element &b) const { return a == b; }

  Element add(const Element &a, const Element &b) const { return a + b; }
  Element sub(const Element &a, const Element &b) const { return a - b; }
  Element neg(const Element &a) const { return -a; }
  Element mul(const Element &a, const Element &b) const { return a * b; }
  Element inv(const Element &a) const {
    if (sgn(a) == 0)
      throw Error("division by zero in QQ");
    return Element(1) / a;
  }
  Element div(const Element &a, const Element &b) const { return a * inv(b); }

  std::string to_string(const Element &a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
};

} // namespace trb
