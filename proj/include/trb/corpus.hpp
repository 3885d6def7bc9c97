#pragma once

// Seeded random ideals for the differential and oracle checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "trb/io.hpp"

namespace trb {

struct CorpusParams {
  std::size_t min_vars = 2;
  std::size_t max_vars = 4;
  std::size_t min_polys = 2;
  std::size_t max_polys = 3;
  std::uint32_t max_degree = 3;
  std::size_t min_terms = 2;
  std::size_t max_terms = 4;
  std::uint32_t modulus = 32003;
  bool homogeneous = true;
};

/// One random ideal; the same (seed, params) always gives the same ideal.
inline IdealSpec random_ideal(std::uint64_t seed, const CorpusParams &params = {}) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  IdealSpec spec;
  spec.modulus = params.modulus;
  const std::size_t n = pick(params.min_vars, params.max_vars);
  for (std::size_t i = 0; i < n; ++i)
    spec.vars.push_back("x" + std::to_string(i + 1));
  const std::size_t d = pick(params.min_polys, params.max_polys);
  std::uniform_int_distribution<long> coeff(1, static_cast<long>(params.modulus) - 1);
  for (std::size_t k = 0; k < d; ++k) {
    const auto deg = static_cast<std::uint32_t>(pick(1, params.max_degree));
    const std::size_t want = pick(params.min_terms, params.max_terms);
    std::set<std::vector<Monomial::Exponent>> seen;
    RawPolynomial poly;
    for (std::size_t attempt = 0; poly.size() < want && attempt < 64; ++attempt) {
      std::vector<Monomial::Exponent> e(n, 0);
      const std::uint32_t total = params.homogeneous ? deg : static_cast<std::uint32_t>(pick(0, deg));
      for (std::uint32_t j = 0; j < total; ++j)
        ++e[pick(0, n - 1)];
      if (!seen.insert(e).second)
        continue;
      poly.push_back({mpz_class(coeff(rng)), std::move(e)});
    }
    spec.polys.push_back(std::move(poly));
  }
  return spec;
}

/// Tiny instances for the brute-force oracle: n <= 3, d <= 3, generator
/// degree <= 2.
inline CorpusParams tiny_corpus_params() {
  CorpusParams p;
  p.max_vars = 3;
  p.max_polys = 3;
  p.max_degree = 2;
  p.max_terms = 3;
  return p;
}

} // namespace trb
