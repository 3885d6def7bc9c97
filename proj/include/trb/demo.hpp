#pragma once

// Nontermination witness: f1 = x^gamma, f2 = x^(alpha+beta) - x^(alpha+gamma)
// with alpha = beta = x1, gamma = x2, run by GVW under the bad-degree-demo
// signature order. Every x2^t E2 yields a new pair with lm x1 x2^(t+1).

#include <string>

#include "trb/engine.hpp"
#include "trb/io.hpp"

namespace trb {

struct NonterminationDemo {
  EngineResult<PrimeField> result;
  std::string order_name;
  /// Pairwise non-equivalent DONE pairs with lm x^(alpha+(t+1)gamma), t >= 0.
  std::size_t family_members = 0;
  bool terminated = false;
};

inline const char *nontermination_demo_ideal() {
  return "ring: Fp:32003[x1,x2]\n"
         "order: grevlex\n"
         "polys:\n"
         "x2\n"
         "x1^2 - x1*x2\n";
}

inline NonterminationDemo nontermination_demo(std::uint64_t max_steps,
                                              SignatureOrderKind kind =
                                                  SignatureOrderKind::ReverseDegree) {
  auto spec = parse_ideal(nontermination_demo_ideal());
  PrimeField F(spec.modulus);
  PolyRing<PrimeField> R(F, MonomialOrder::parse(spec.order, spec.vars.size()), spec.vars);
  auto f = to_polynomials(R, spec.polys);
  auto sord = make_signature_order(kind, R, f);
  EngineOptions opts;
  opts.max_steps = max_steps;

  NonterminationDemo out;
  out.order_name = sord.name();
  out.result = run_trb(StrategyBundle::gvw(), R, f, sord, opts);
  out.terminated = out.result.stats.terminated;

  const Monomial alpha({1, 0});
  const Monomial gamma({0, 1});
  SigContext<PrimeField> ctx(R, sord, f);
  std::vector<const Pair<PrimeField> *> members;
  for (const auto &p : out.result.done) {
    if (p.is_syzygy())
      continue;
    const Monomial &lm = R.leading_monomial(p.v);
    if (!mono_divides(alpha, lm))
      continue;
    Monomial rest = mono_div(lm, alpha);
    if (rest.is_one())
      continue;
    while (!rest.is_one() && mono_divides(gamma, rest))
      rest = mono_div(rest, gamma);
    if (!rest.is_one())
      continue;
    bool fresh = true;
    for (const auto *q : members)
      if (ctx.is_equivalent(*q, p))
        fresh = false;
    if (fresh)
      members.push_back(&p);
  }
  out.family_members = members.size();
  return out;
}

} // namespace trb
