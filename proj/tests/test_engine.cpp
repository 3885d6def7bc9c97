#include <doctest.h>

#include "fixtures.hpp"
#include "trb/corpus.hpp"
#include "trb/demo.hpp"
#include "trb/engine.hpp"
#include "trb/verify.hpp"

using namespace fx;

namespace {

template <class K>
std::multiset<std::string> keys(const PolyRing<K> &R, const std::vector<Pair<K>> &done) {
  std::multiset<std::string> out;
  for (const auto &p : done)
    out.insert(sig_to_string(p.sig, R.names()) + ":" +
               (p.is_syzygy() ? std::string("0") : R.to_string(R.leading_monomial(p.v))));
  return out;
}

const std::multiset<std::string> kFourVarPairs{
    "E3:x1*x3",      "E2:x1*x2",      "x3*E2:x2^2*x3",      "E1:x1*x4",
    "x3*E1:x3^2*x4", "x2*E1:x2^2*x4", "x2*x3*E1:x2*x3^2*x4"};

std::vector<StrategyBundle> bundles() {
  return {StrategyBundle::f5(), StrategyBundle::ef5(), StrategyBundle::gvw(), StrategyBundle::mj(),
          StrategyBundle::srewritten()};
}

} // namespace

TEST_CASE("four-variable fixture under gvw, f5 and ef5") {
  auto in = four_var();
  auto pot = SignatureOrder::pot(in.ring.order(), 3);
  for (const auto &b : {StrategyBundle::gvw(), StrategyBundle::f5(), StrategyBundle::ef5()}) {
    auto r = run_trb(b, in.ring, in.f, pot);
    CHECK(r.stats.terminated);
    CHECK(keys(in.ring, r.done) == kFourVarPairs);
  }
}

TEST_CASE("mj and srewritten drop the seventh four-variable fixture pair") {
  auto in = four_var();
  auto pot = SignatureOrder::pot(in.ring.order(), 3);
  auto want = kFourVarPairs;
  want.erase("x2*x3*E1:x2*x3^2*x4");
  CHECK(keys(in.ring, run_trb(StrategyBundle::mj(), in.ring, in.f, pot).done) == want);
  CHECK(keys(in.ring, run_trb(StrategyBundle::srewritten(), in.ring, in.f, pot).done) == want);
}

TEST_CASE("mj never reduces x2*x3*x5*E1 on the five-variable fixture") {
  auto in = five_var();
  auto pot = SignatureOrder::pot(in.ring.order(), 3);
  EngineOptions o;
  o.record_trace = true;
  auto r = run_trb(StrategyBundle::mj(), in.ring, in.f, pot, o);
  const auto target = sig({0, 1, 1, 0, 1}, 1);
  for (const auto &ev : r.trace)
    if (ev.sig == target)
      CHECK(ev.blocked_by == Criterion::Mpair);
  for (const auto &p : r.done)
    CHECK_FALSE(p.sig == target);
  CHECK(r.stats.blocked_count(Criterion::Mpair) >= 1);
}

TEST_CASE("single generator") {
  auto in = make_instance(parse_ideal("ring: QQ[x1,x2]\npolys:\nx1\n"), Q());
  auto pot = SignatureOrder::pot(in.ring.order(), 1);
  for (const auto &b : bundles()) {
    auto r = run_trb(b, in.ring, in.f, pot);
    CHECK(r.stats.terminated);
    CHECK(r.stats.selections == 1);
    REQUIRE(r.done.size() == 1);
    CHECK(r.done[0].sig == sig({0, 0}, 1));
  }
}

TEST_CASE("bundle constraints") {
  auto inh = make_instance(parse_ideal("ring: QQ[x,y]\npolys:\nx^2 - y\nx*y - 1\n"), Q());
  auto pot = SignatureOrder::pot(inh.ring.order(), 2);
  try {
    run_trb(StrategyBundle::f5(), inh.ring, inh.f, pot);
    FAIL("expected a constraint error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("--homogenize") != std::string::npos);
  }
  CHECK(run_trb(StrategyBundle::gvw(), inh.ring, inh.f, pot).stats.terminated);

  auto in = four_var();
  auto sch = make_signature_order(SignatureOrderKind::Schreyer, in.ring, in.f);
  CHECK_THROWS_AS(run_trb(StrategyBundle::f5(), in.ring, in.f, sch), Error);
  CHECK(run_trb(StrategyBundle::ef5(), in.ring, in.f, sch).stats.terminated);
  auto bad = make_signature_order(SignatureOrderKind::ReverseDegree, in.ring, in.f);
  CHECK_THROWS_AS(run_trb(StrategyBundle::mj(), in.ring, in.f, bad), Error);

  auto zero = in;
  zero.f[1] = Polynomial<Q>();
  CHECK_THROWS_AS(run_trb(StrategyBundle::gvw(), zero.ring, zero.f, pot), Error);
  EngineOptions none;
  none.max_steps = 0;
  CHECK_THROWS_AS(run_trb(StrategyBundle::gvw(), in.ring, in.f, SignatureOrder::pot(in.ring.order(), 3), none),
                  Error);
  CHECK_THROWS_AS(StrategyBundle::by_name("buchberger"), Error);
  CHECK(StrategyBundle::by_name("trb-mj").name == "trb-mj");
}

TEST_CASE("J-pairs queued when a pair is stored") {
  auto in = four_var();
  Engine<Q> engine(in.ring, in.f, SignatureOrder::pot(in.ring.order(), 3), StrategyBundle::gvw());
  engine.step();
  CHECK(engine.stats().jpairs_generated == 0);
  engine.step();
  CHECK(engine.stats().jpairs_generated == 1);
  auto todo = engine.todo();
  CHECK(std::any_of(todo.begin(), todo.end(), [](const auto &e) {
    return e.sig == sig({0, 0, 1, 0}, 2) && e.mult == mono({0, 0, 1, 0});
  }));
}

TEST_CASE("selection ties go to the smaller leading monomial") {
  auto in = four_var();
  Engine<Q> engine(in.ring, in.f, SignatureOrder::pot(in.ring.order(), 3), StrategyBundle::gvw());
  while (engine.step()) {
    auto todo = engine.todo();
    for (std::size_t i = 1; i < todo.size(); ++i)
      if (todo[i].sig == todo[i - 1].sig)
        CHECK(in.ring.order().compare(todo[i - 1].lm, todo[i].lm) <= 0);
  }
}

TEST_CASE("stats bookkeeping and monotone selections on random instances") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto spec = random_ideal(seed);
    auto in = make_instance(spec, Fp(spec.modulus));
    auto pot = SignatureOrder::pot(in.ring.order(), in.f.size());
    for (const auto &b : bundles()) {
      EngineOptions o;
      o.record_trace = true;
      auto r = run_trb(b, in.ring, in.f, pot, o);
      CHECK(r.stats.selections == r.stats.blocked_total() + r.stats.reductions_performed);
      CHECK(r.stats.stored <= r.stats.reductions_performed);
      for (std::size_t i = 1; i < r.trace.size(); ++i)
        CHECK(pot.compare(r.trace[i - 1].sig, r.trace[i].sig) <= 0);
    }
  }
}

TEST_CASE("at most one admissible multiple per leading monomial during F5 runs") {
  auto check_run = [](const auto &in) {
    using K = std::decay_t<decltype(in.ring.field())>;
    auto pot = SignatureOrder::pot(in.ring.order(), in.f.size());
    Engine<K> engine(in.ring, in.f, pot, StrategyBundle::f5());
    const auto &ctx = engine.context();
    while (engine.step()) {
      if (!engine.last_selected())
        continue;
      const auto cur = *engine.last_selected();
      const auto bound = cur.mono.degree() + in.ring.total_degree(in.f[cur.index]);
      const auto &done = engine.done();
      for (std::size_t a = 0; a < done.size(); ++a)
        for (std::size_t b = a + 1; b < done.size(); ++b) {
          const auto &p = engine.store()[done[a]];
          const auto &q = engine.store()[done[b]];
          if (p.is_syzygy() || q.is_syzygy())
            continue;
          const auto l = mono_lcm(ctx.lm(p), ctx.lm(q));
          if (l.degree() > bound)
            continue;
          for (const auto &w : monomials_of_degree(in.ring.nvars(), bound - l.degree())) {
            const auto t1 = mono_mul(w, mono_div(l, ctx.lm(p)));
            const auto t2 = mono_mul(w, mono_div(l, ctx.lm(q)));
            const auto s1 = sig_mul(t1, p.sig), s2 = sig_mul(t2, q.sig);
            if (!pot.less(s1, cur) || !pot.less(s2, cur))
              continue;
            bool both = engine.passes_criteria(done[a], t1) && engine.passes_criteria(done[b], t2);
            CHECK_FALSE(both);
          }
        }
    }
  };
  check_run(four_var());
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto spec = random_ideal(seed);
    check_run(make_instance(spec, Fp(spec.modulus)));
  }
}

TEST_CASE("regular reductions give the same outputs as top reductions") {
  auto in = four_var();
  auto pot = SignatureOrder::pot(in.ring.order(), 3);
  for (const auto &b : {StrategyBundle::gvw(), StrategyBundle::mj()}) {
    EngineOptions top;
    top.record_trace = true;
    auto reg = top;
    reg.regular_reductions = true;
    auto a = run_trb(b, in.ring, in.f, pot, top);
    auto c = run_trb(b, in.ring, in.f, pot, reg);
    REQUIRE(a.trace.size() == c.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      CHECK(a.trace[i].sig == c.trace[i].sig);
      CHECK(a.trace[i].output_lm == c.trace[i].output_lm);
      CHECK(a.trace[i].output_syzygy == c.trace[i].output_syzygy);
    }
  }
}

TEST_CASE("F5 reduction of x3 (E2, f2) on the four-variable fixture") {
  auto in = four_var();
  EngineOptions o;
  o.record_trace = true;
  auto r = run_trb(StrategyBundle::f5(), in.ring, in.f, SignatureOrder::pot(in.ring.order(), 3), o);
  bool seen = false;
  for (const auto &ev : r.trace)
    if (ev.sig == sig({0, 0, 1, 0}, 2) && ev.output_lm) {
      CHECK(*ev.output_lm == mono({0, 2, 1, 0}));
      CHECK(ev.reduction_steps == 1);
      seen = true;
    }
  CHECK(seen);
}

TEST_CASE("non-terminating order") {
  auto capped = nontermination_demo(200);
  CHECK_FALSE(capped.terminated);
  CHECK(capped.family_members >= 20);
  CHECK_FALSE(nontermination_demo(1).terminated);
  auto pot = nontermination_demo(200, SignatureOrderKind::Pot);
  CHECK(pot.terminated);
}

TEST_CASE("every bundle computes a Groebner basis on random instances") {
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    auto spec = random_ideal(seed);
    auto in = make_instance(spec, Fp(spec.modulus));
    auto oracle = buchberger(in.ring, in.f);
    for (const auto &b : bundles()) {
      auto r = run_trb(b, in.ring, in.f, SignatureOrder::pot(in.ring.order(), in.f.size()));
      REQUIRE(r.stats.terminated);
      CHECK(is_groebner_basis(in.ring, r.basis()));
      CHECK(leading_ideal_equal(in.ring, r.basis(), oracle));
    }
    for (auto k : {SignatureOrderKind::Schreyer, SignatureOrderKind::DegreeFirst}) {
      auto sord = make_signature_order(k, in.ring, in.f);
      for (const auto &b : {StrategyBundle::ef5(), StrategyBundle::gvw(), StrategyBundle::mj()}) {
        auto r = run_trb(b, in.ring, in.f, sord);
        REQUIRE(r.stats.terminated);
        CHECK(leading_ideal_equal(in.ring, r.basis(), oracle));
      }
    }
  }
}
