#pragma once

#include <random>
#include <string>
#include <vector>

#include "trb/io.hpp"
#include "trb/pair.hpp"

namespace fx {

using namespace trb;
using Q = RationalField;
using Fp = PrimeField;

inline const char *kFourVar = "ring: QQ[x1,x2,x3,x4]\n"
                           "order: grevlex\n"
                           "polys:\n"
                           "x1*x4\n"
                           "x1*x2 - x2^2\n"
                           "x1*x3 - x3^2\n";

inline const char *kFiveVar = "ring: QQ[x1,x2,x3,x4,x5]\n"
                              "order: grevlex\n"
                              "polys:\n"
                              "x1*x4\n"
                              "x1*x2*x5 - x2^2*x5\n"
                              "x1*x3 - x3^2\n";

inline Instance<Q> four_var() { return make_instance(parse_ideal(kFourVar), Q()); }
inline Instance<Q> five_var() { return make_instance(parse_ideal(kFiveVar), Q()); }

inline Monomial mono(std::vector<Monomial::Exponent> e) { return Monomial(std::move(e)); }

template <class K> Polynomial<K> poly(const PolyRing<K> &ring, const std::string &text) {
  return to_polynomial(ring, parse_polynomial(text, ring.names()));
}

/// A pair (sig + ..., v) with signature coefficient 1 and no module tracking.
template <class K>
Pair<K> pair(const PolyRing<K> &ring, ModuleMonomial sig, const std::string &v) {
  return Pair<K>{std::move(sig), ring.field().one(), poly(ring, v), std::nullopt};
}

inline ModuleMonomial sig(std::vector<Monomial::Exponent> e, std::size_t index_one_based) {
  return {Monomial(std::move(e)), index_one_based - 1};
}

inline Monomial random_monomial(std::mt19937_64 &rng, std::size_t n, unsigned max_exp = 3) {
  std::uniform_int_distribution<unsigned> d(0, max_exp);
  std::vector<Monomial::Exponent> e(n);
  for (auto &x : e)
    x = d(rng);
  return Monomial(std::move(e));
}

template <class K>
Polynomial<K> random_poly(const PolyRing<K> &ring, std::mt19937_64 &rng, std::size_t terms = 4) {
  std::uniform_int_distribution<long long> c(-20, 20);
  std::vector<Term<K>> t;
  for (std::size_t k = 0; k < terms; ++k)
    t.push_back({ring.field().from_int(c(rng)), random_monomial(rng, ring.nvars())});
  return ring.normalize(std::move(t));
}

} // namespace fx
