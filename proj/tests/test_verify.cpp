#include <doctest.h>

#include "fixtures.hpp"
#include "trb/corpus.hpp"
#include "trb/engine.hpp"
#include "trb/verify.hpp"

using namespace fx;

TEST_CASE("S-polynomials") {
  auto in = four_var();
  const auto &R = in.ring;
  CHECK(s_polynomial(R, in.f[1], in.f[2]) == poly(R, "-x2^2*x3 + x2*x3^2"));
  CHECK(s_polynomial(R, in.f[1], in.f[1]).is_zero());
  auto a = poly(R, "x1"), b = poly(R, "x2^2");
  CHECK(normal_form(R, s_polynomial(R, a, b), {a, b}).is_zero());
  CHECK_THROWS_AS(s_polynomial(R, R.zero(), a), Error);
}

TEST_CASE("normal forms") {
  auto in = four_var();
  const auto &R = in.ring;
  CHECK(normal_form(R, in.f[0], {in.f[0]}).is_zero());
  auto one = R.constant(Q().one());
  CHECK(normal_form(R, one, in.f) == one);
  auto r = normal_form(R, poly(R, "x1^2*x2 + x3^3"), {poly(R, "x1*x2 - x2^2")});
  for (const auto &t : r)
    CHECK_FALSE(mono_divides(mono({1, 1, 0, 0}), t.mono));
}

TEST_CASE("Buchberger oracle") {
  auto single = make_instance(parse_ideal("ring: QQ[x1,x2]\npolys:\nx1\n"), Q());
  auto g = buchberger(single.ring, single.f);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == single.f[0]);

  auto in = four_var();
  auto gb = buchberger(in.ring, in.f);
  CHECK(is_groebner_basis(in.ring, gb));
  std::vector<Polynomial<Q>> lts;
  for (const char *m : {"x1*x3", "x1*x2", "x2^2*x3", "x1*x4", "x3^2*x4", "x2^2*x4", "x2*x3^2*x4"})
    lts.push_back(poly(in.ring, m));
  CHECK(leading_ideal_equal(in.ring, gb, lts));

  auto unit = make_instance(parse_ideal("ring: QQ[x1]\npolys:\nx1 - 1\nx1\n"), Q());
  auto ub = buchberger(unit.ring, unit.f);
  CHECK(std::any_of(ub.begin(), ub.end(), [&](const auto &p) {
    return unit.ring.leading_monomial(p).is_one();
  }));
}

TEST_CASE("leading ideal comparison") {
  PolyRing<Q> R(Q(), MonomialOrder(MonomialOrderKind::Grevlex, 3), {"x1", "x2", "x3"});
  CHECK_FALSE(leading_ideal_equal(R, {poly(R, "x1*x2"), poly(R, "x1")},
                                  {poly(R, "x1"), poly(R, "x2*x3")}));
  CHECK(leading_ideal_equal(R, {poly(R, "x1*x2"), poly(R, "x1")}, {poly(R, "x1")}));
}

TEST_CASE("engine output verifies on the four-variable fixture") {
  auto in = four_var();
  auto r = run_trb(StrategyBundle::gvw(), in.ring, in.f, SignatureOrder::pot(in.ring.order(), 3));
  auto g = r.basis();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      CHECK(normal_form(in.ring, s_polynomial(in.ring, g[i], g[j]), g).is_zero());
  CHECK(leading_ideal_equal(in.ring, g, buchberger(in.ring, in.f)));
}

TEST_CASE("Buchberger output is always a Groebner basis") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto spec = random_ideal(seed);
    auto in = make_instance(spec, Fp(spec.modulus));
    CHECK(is_groebner_basis(in.ring, buchberger(in.ring, in.f)));
  }
}

TEST_CASE("brute-force TRB classes of the four-variable fixture") {
  auto in = four_var();
  auto pot = SignatureOrder::pot(in.ring.order(), 3);
  for (std::uint64_t bound : {4, 5}) {
    auto bf = brute_force_trb(in.ring, in.f, pot, bound);
    std::set<std::string> got;
    for (const auto &[s, L] : bf.trb)
      got.insert(sig_to_string(s, in.ring.names()) + ":" + in.ring.to_string(L));
    CHECK(got == std::set<std::string>{"E3:x1*x3", "E2:x1*x2", "x3*E2:x2^2*x3", "E1:x1*x4",
                                       "x3*E1:x3^2*x4", "x2*E1:x2^2*x4"});
    CHECK_FALSE(trb_reduction_counterexample(pot, bf));
  }
  // the seventh pair is a TRP pair but not a TRB pair
  auto bf = brute_force_trb(in.ring, in.f, pot, 4);
  const auto *e = bf.find(sig({0, 1, 1, 0}, 1));
  REQUIRE(e);
  REQUIRE(e->trp_lm);
  CHECK(*e->trp_lm == mono({0, 1, 2, 1}));
}

TEST_CASE("brute-force TRB edge cases") {
  auto single = make_instance(parse_ideal("ring: QQ[x1,x2]\npolys:\nx1\n"), Q());
  auto pot1 = SignatureOrder::pot(single.ring.order(), 1);
  auto bf = brute_force_trb(single.ring, single.f, pot1, 4);
  REQUIRE(bf.trb.size() == 1);
  CHECK(bf.trb[0].first == sig({0, 0}, 1));

  // f2 = x1 f1: x1 E1 is a syzygy signature
  auto dep = make_instance(parse_ideal("ring: QQ[x1,x2]\npolys:\nx1 + x2\nx1^2 + x1*x2\n"), Q());
  auto pot2 = SignatureOrder::pot(dep.ring.order(), 2);
  auto bd = brute_force_trb(dep.ring, dep.f, pot2, 4);
  const auto *e = bd.find(sig({1, 0}, 1));
  REQUIRE(e);
  CHECK_FALSE(e->trp_lm);
  for (const auto &[s, L] : bd.trb)
    CHECK_FALSE((s.index == 0 && mono_divides(mono({1, 0}), s.mono)));

  auto inh = make_instance(parse_ideal("ring: QQ[x,y]\npolys:\nx^2 - y\n"), Q());
  CHECK_THROWS_AS(brute_force_trb(inh.ring, inh.f, SignatureOrder::pot(inh.ring.order(), 1), 3),
                  Error);
  auto in = four_var();
  auto bad = make_signature_order(SignatureOrderKind::ReverseDegree, in.ring, in.f);
  CHECK_THROWS_AS(brute_force_trb(in.ring, in.f, bad, 3), Error);
}

TEST_CASE("TRB oracle agrees with every bundle on tiny instances") {
  for (std::uint64_t seed = 3001; seed <= 3010; ++seed) {
    auto spec = random_ideal(seed, tiny_corpus_params());
    auto in = make_instance(spec, Fp(spec.modulus));
    auto pot = SignatureOrder::pot(in.ring.order(), in.f.size());
    auto bf = brute_force_trb(in.ring, in.f, pot, 4);
    CHECK_FALSE(trb_reduction_counterexample(pot, bf));
    // TRP results for one signature are unique up to similarity: the enumerator
    // keeps one minimal leading monomial per signature
    for (const auto &e : bf.entries)
      if (e.trp_lm)
        CHECK(e.achievable.front() == *e.trp_lm);
    for (const auto &b : {StrategyBundle::f5(), StrategyBundle::ef5(), StrategyBundle::gvw(),
                          StrategyBundle::mj(), StrategyBundle::srewritten()}) {
      auto r = run_trb(b, in.ring, in.f, pot);
      for (const auto &[s, L] : bf.trb) {
        bool covered = std::any_of(r.done.begin(), r.done.end(), [&](const auto &p) {
          return !p.is_syzygy() && p.sig == s && in.ring.leading_monomial(p.v) == L;
        });
        CHECK(covered);
      }
    }
  }
}
