#include <doctest.h>

#include "fixtures.hpp"

using namespace fx;

namespace {

struct FourVarCtx {
  Instance<Q> in = four_var();
  SignatureOrder sord = SignatureOrder::pot(in.ring.order(), 3);
  SigContext<Q> ctx{in.ring, sord, in.f};
  const PolyRing<Q> &R = in.ring;
};

} // namespace

TEST_CASE("signature of a multiplied pair") {
  FourVarCtx c;
  auto p = c.ctx.initial_pair(1, false);
  CHECK(c.ctx.multiply(mono({0, 0, 1, 0}), p).sig == sig({0, 0, 1, 0}, 2));
  CHECK(c.ctx.multiply(c.R.one_monomial(), p).sig == p.sig);
  auto q = pair(c.R, sig({0, 0, 1, 0}, 1), "x3^2*x4");
  CHECK(c.ctx.multiply(mono({0, 1, 0, 0}), q).sig == sig({0, 1, 1, 0}, 1));
}

TEST_CASE("pair order") {
  FourVarCtx c;
  auto p1 = c.ctx.initial_pair(1, false);
  auto p2 = c.ctx.initial_pair(2, false);
  CHECK(c.ctx.pair_compare(p1, p2) < 0);
  CHECK(c.ctx.pair_compare(p1, p1) == 0);
  auto q = pair(c.R, sig({0, 0, 1, 0}, 2), "x2^2*x3 - x2*x3^2");
  CHECK(c.ctx.pair_compare(q, p2) < 0);
  auto z = Pair<Q>{sig({0, 0, 0, 0}, 1), Q().one(), Polynomial<Q>(), std::nullopt};
  CHECK_THROWS_AS(c.ctx.pair_compare(z, p1), Error);
}

TEST_CASE("equivalence and similarity") {
  FourVarCtx c;
  auto a = pair(c.R, sig({0, 0, 0, 0}, 1), "x1*x4");
  auto b = pair(c.R, sig({0, 0, 0, 0}, 1), "2*x1*x4");
  CHECK(c.ctx.is_equivalent(a, b));
  auto s1 = pair(c.R, sig({0, 0, 1, 0}, 1), "x3^2*x4");
  auto s2 = pair(c.R, sig({0, 1, 1, 0}, 1), "x2*x3^2*x4");
  CHECK(c.ctx.is_similar(s1, s2));
  CHECK_FALSE(c.ctx.is_equivalent(s1, s2));
  CHECK_FALSE(c.ctx.is_similar(c.ctx.initial_pair(0, false), c.ctx.initial_pair(1, false)));
}

TEST_CASE("equivalence refines similarity on random pairs") {
  FourVarCtx c;
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    auto m = random_monomial(rng, 4, 1);
    auto lm = random_monomial(rng, 4, 2);
    Pair<Q> a{{m, k % 3 == 0 ? 0u : 1u}, Q().one(), c.R.monomial(lm, Q().one()), std::nullopt};
    Pair<Q> b{{random_monomial(rng, 4, 1), 1}, Q().one(),
              c.R.monomial(random_monomial(rng, 4, 2), Q().one()), std::nullopt};
    if (k % 5 == 0)
      b = a;
    if (c.ctx.is_equivalent(a, b))
      CHECK(c.ctx.is_similar(a, b));
  }
}

TEST_CASE("top reduction") {
  FourVarCtx c;
  auto p1 = c.ctx.multiply(mono({0, 0, 1, 0}), c.ctx.initial_pair(1, false));
  auto p2 = c.ctx.initial_pair(2, false);
  CHECK(c.ctx.is_top_reducible(p1, p2));
  CHECK_FALSE(c.ctx.is_top_reducible(p2, p2));
  auto r = c.ctx.top_reduce_step(p1, p2);
  CHECK(r.sig == p1.sig);
  CHECK(c.R.to_string(c.R.monic(r.v)) == "x2^2*x3 - x2*x3^2");
  CHECK(c.R.leading_monomial(r.v) == mono({0, 2, 1, 0}));

  // x2 (E1, x1x4) is similar to (E1, x1x4), so the strict order forbids it
  auto e1 = c.ctx.initial_pair(0, false);
  auto x2e1 = pair(c.R, sig({0, 1, 0, 0}, 1), "x1*x2*x4");
  CHECK_FALSE(c.ctx.is_top_reducible(x2e1, e1));
  // the same leading term against a smaller-signature reducer cancels completely
  auto low = pair(c.R, sig({0, 0, 0, 0}, 3), "x1*x4");
  auto s = c.ctx.top_reduce_step(x2e1, low);
  CHECK(s.is_syzygy());
  CHECK(s.sig == x2e1.sig);

  auto z = Pair<Q>{sig({0, 0, 0, 0}, 1), Q().one(), Polynomial<Q>(), std::nullopt};
  CHECK_FALSE(c.ctx.is_top_reducible(p1, z));
  CHECK_THROWS_AS(c.ctx.top_reduce_step(p2, p1), Error);
}

TEST_CASE("regular reduction") {
  FourVarCtx c;
  auto p1 = c.ctx.multiply(mono({0, 0, 1, 0}), c.ctx.initial_pair(1, false));
  auto p2 = c.ctx.initial_pair(2, false);
  CHECK(c.ctx.is_regular_reducible(p1, p2));
  // similar with proportional leading data: not regular reducible
  CHECK_FALSE(c.ctx.is_regular_reducible(p2, p2));
  // similar with non-proportional leading data: regular reducible
  auto q = p2;
  q.sig_coeff = Q().from_int(2);
  CHECK(c.ctx.is_regular_reducible(p2, q));
  auto r = c.ctx.regular_reduce_step(p2, q);
  CHECK(r.is_syzygy());
  CHECK(r.sig == p2.sig);
  CHECK(r.sig_coeff == -1);
}

TEST_CASE("J-pairs") {
  FourVarCtx c;
  auto p1 = c.ctx.initial_pair(1, false);
  auto p2 = c.ctx.initial_pair(2, false);
  auto j = c.ctx.j_pair(p1, 1, p2, 2);
  REQUIRE(j);
  CHECK(j->carrier == 1);
  CHECK(j->mult == mono({0, 0, 1, 0}));
  auto z = Pair<Q>{sig({0, 0, 0, 0}, 1), Q().one(), Polynomial<Q>(), std::nullopt};
  CHECK_FALSE(c.ctx.j_pair(z, 0, p2, 2));
  CHECK_FALSE(c.ctx.j_pair(p1, 1, p1, 1));
}

TEST_CASE("J-pair carrier has the larger multiplied signature") {
  std::mt19937_64 rng(9);
  FourVarCtx c;
  for (int k = 0; k < 300; ++k) {
    auto a = pair(c.R, {random_monomial(rng, 4, 1), k % 3}, "x1*x4");
    a.v = c.R.monomial(random_monomial(rng, 4, 2), Q().one());
    auto b = pair(c.R, {random_monomial(rng, 4, 1), (k / 3) % 3}, "x1*x4");
    b.v = c.R.monomial(random_monomial(rng, 4, 2), Q().one());
    auto j = c.ctx.j_pair(a, 0, b, 1);
    if (!j)
      continue;
    const auto &car = j->carrier == 0 ? a : b;
    const auto &other = j->carrier == 0 ? b : a;
    auto l = mono_lcm(c.ctx.lm(a), c.ctx.lm(b));
    auto other_sig = sig_mul(mono_div(l, c.ctx.lm(other)), other.sig);
    CHECK(c.sord.less(other_sig, sig_mul(j->mult, car.sig)));
  }
}

TEST_CASE("Koszul signatures") {
  FourVarCtx c;
  auto p1 = c.ctx.initial_pair(1, false);
  auto p2 = c.ctx.initial_pair(2, false);
  CHECK(*c.ctx.koszul_signature(p1, p2) == sig({1, 0, 1, 0}, 2));
  CHECK_FALSE(c.ctx.koszul_signature(p1, p1));
  auto a = pair(c.R, sig({0, 0, 0, 0}, 1), "x1*x4");
  auto b = pair(c.R, sig({0, 0, 0, 0}, 3), "x1*x4");
  CHECK(c.ctx.koszul_signature(a, b)->index == 0);
}

TEST_CASE("Koszul signature follows the component sub-order") {
  PolyRing<Fp> R(Fp(), MonomialOrder(MonomialOrderKind::Grevlex, 2), {"x1", "x2"});
  std::vector<Polynomial<Fp>> f{poly(R, "x2"), poly(R, "x1^2 - x1*x2")};
  auto bad = make_signature_order(SignatureOrderKind::ReverseDegree, R, f);
  SigContext<Fp> ctx(R, bad, f);
  // x1*x2*E1 is the leading module term of f2*E1 under the reversed sub-order
  CHECK(*ctx.koszul_signature(ctx.initial_pair(0, false), ctx.initial_pair(1, false)) ==
        sig({1, 1}, 1));
}

TEST_CASE("pair invariant") {
  FourVarCtx c;
  auto p = c.ctx.initial_pair(0, true);
  CHECK(c.ctx.check_pair_invariant(p));
  auto q = c.ctx.multiply(mono({0, 0, 1, 0}), c.ctx.initial_pair(1, true));
  auto r = c.ctx.top_reduce_step(q, c.ctx.initial_pair(2, true));
  CHECK(c.ctx.check_pair_invariant(r));
  p.v = c.R.add(p.v, c.R.constant(Q().one()));
  CHECK_FALSE(c.ctx.check_pair_invariant(p));
  CHECK_THROWS_AS(c.ctx.check_pair_invariant(c.ctx.initial_pair(0, false)), Error);
}
