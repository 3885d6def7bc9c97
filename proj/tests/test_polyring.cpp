#include <doctest.h>

#include "fixtures.hpp"

using namespace fx;

TEST_CASE("field arithmetic") {
  Fp F(32003);
  CHECK(F.mul(F.inv(7), 7) == 1);
  CHECK(F.from_int(-1) == 32002);
  CHECK(F.add(32002, 5) == 4);
  CHECK(F.to_string(32002) == "-1");
  CHECK_THROWS_AS(F.inv(0), Error);
  CHECK_THROWS_AS(Fp(32004), Error);

  Q R;
  CHECK(R.div(R.from_int(3), R.from_int(6)) == mpq_class(1, 2));
  CHECK_THROWS_AS(R.inv(R.zero()), Error);
}

TEST_CASE("monomial divisibility and lcm") {
  CHECK(mono_divides(mono({1, 1, 0, 0}), mono({1, 1, 1, 0})));
  CHECK_FALSE(mono_divides(mono({1, 0, 0, 1}), mono({1, 1, 1, 0})));
  CHECK(mono_divides(mono({0, 0, 0, 0}), mono({3, 0, 2, 1})));
  CHECK(mono_lcm(mono({1, 1, 0}), mono({1, 0, 1})) == mono({1, 1, 1}));
  CHECK(mono_lcm(mono({2, 1, 0}), mono({2, 1, 0})) == mono({2, 1, 0}));
  CHECK(mono_lcm(mono({2, 1, 0}), mono({0, 0, 0})) == mono({2, 1, 0}));
  CHECK(mono_div(mono({2, 1, 1}), mono({1, 1, 0})) == mono({1, 0, 1}));
  CHECK_THROWS_AS(mono_mul(mono({1, 0}), mono({1, 0, 0})), Error);
}

TEST_CASE("monomial orders") {
  MonomialOrder grevlex(MonomialOrderKind::Grevlex, 3);
  MonomialOrder lex(MonomialOrderKind::Lex, 3);
  MonomialOrder grlex(MonomialOrderKind::Grlex, 3);
  CHECK(grevlex.compare(mono({0, 2, 1}), mono({0, 1, 2})) > 0);
  CHECK(grevlex.compare(mono({1, 0, 0}), mono({0, 1, 0})) > 0);
  CHECK(grevlex.compare(mono({1, 1, 0}), mono({1, 1, 0})) == 0);
  // x1 x3^2 vs x2^3: grevlex prefers x2^3, grlex prefers x1 x3^2
  CHECK(grevlex.compare(mono({1, 0, 2}), mono({0, 3, 0})) < 0);
  CHECK(grlex.compare(mono({1, 0, 2}), mono({0, 3, 0})) > 0);
  CHECK(lex.compare(mono({1, 0, 0}), mono({0, 5, 5})) > 0);
  CHECK(grevlex.is_degree_compatible());
  CHECK_FALSE(lex.is_degree_compatible());
  CHECK_THROWS_AS(MonomialOrder::matrix({{1, 1, 1}, {1, 1, 1}, {0, 0, 1}}), Error);
  CHECK_THROWS_AS(MonomialOrder::parse("revlex", 3), Error);
}

TEST_CASE("admissibility of the shipped monomial orders on random monomials") {
  std::mt19937_64 rng(7);
  for (auto kind : {MonomialOrderKind::Lex, MonomialOrderKind::Grlex, MonomialOrderKind::Grevlex}) {
    MonomialOrder ord(kind, 4);
    for (int k = 0; k < 2000; ++k) {
      auto a = random_monomial(rng, 4), b = random_monomial(rng, 4), c = random_monomial(rng, 4);
      CHECK(ord.compare(Monomial::one(4), a) <= 0);
      if (ord.less(a, b))
        CHECK(ord.less(mono_mul(a, c), mono_mul(b, c)));
      CHECK(ord.compare(a, b) == 0 == (a == b));
    }
  }
}

TEST_CASE("matrix encodings agree with the direct orders") {
  std::mt19937_64 rng(11);
  for (auto kind : {MonomialOrderKind::Lex, MonomialOrderKind::Grlex, MonomialOrderKind::Grevlex}) {
    MonomialOrder direct(kind, 4);
    auto viamatrix = MonomialOrder::matrix(direct.weight_matrix());
    for (int k = 0; k < 2000; ++k) {
      auto a = random_monomial(rng, 4), b = random_monomial(rng, 4);
      CHECK(direct.compare(a, b) == viamatrix.compare(a, b));
    }
  }
  CHECK(same_matrix_order({{1, 1}, {1, 0}}, {{2, 2}, {3, 1}}));
  CHECK_FALSE(same_matrix_order({{1, 1}, {1, 0}}, {{1, 1}, {0, 1}}));
}

TEST_CASE("polynomial arithmetic") {
  auto in = four_var();
  const auto &R = in.ring;
  CHECK(R.add(poly(R, "x1*x2 - x2^2"), poly(R, "x2^2")) == poly(R, "x1*x2"));
  CHECK(R.leading_monomial(poly(R, "x1*x2 - x2^2")) == mono({1, 1, 0, 0}));
  auto p = poly(R, "3*x1*x3 - x3^2 + 2");
  CHECK(R.scale(R.field().one(), R.one_monomial(), p) == p);
  CHECK(R.sub(p, p).is_zero());
  CHECK_THROWS_AS(R.leading_monomial(R.zero()), Error);
  CHECK(R.to_string(R.monic(poly(R, "2*x2^2*x3 - 2*x2*x3^2"))) == "x2^2*x3 - x2*x3^2");
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(3);
  PolyRing<Fp> R(Fp(32003), MonomialOrder(MonomialOrderKind::Grevlex, 3), {"a", "b", "c"});
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(R, rng), q = random_poly(R, rng), r = random_poly(R, rng);
    CHECK(R.add(p, q) == R.add(q, p));
    CHECK(R.add(R.add(p, q), r) == R.add(p, R.add(q, r)));
    CHECK(R.mul(p, R.add(q, r)) == R.add(R.mul(p, q), R.mul(p, r)));
    CHECK(R.mul(p, q) == R.mul(q, p));
    CHECK(R.sub(p, p).is_zero());
    auto s = R.add(p, q);
    for (std::size_t i = 1; i < s.size(); ++i)
      CHECK(R.order().less(s[i].mono, s[i - 1].mono));
    for (const auto &t : s)
      CHECK_FALSE(R.field().is_zero(t.coeff));
  }
}

TEST_CASE("homogeneity and homogenization") {
  PolyRing<Q> R(Q(), MonomialOrder(MonomialOrderKind::Grevlex, 2), {"x1", "x2"});
  CHECK(R.is_homogeneous(poly(R, "x1*x2 - x2^2")));
  CHECK_FALSE(R.is_homogeneous(poly(R, "x1^2 - x2")));
  auto H = R.with_variable("h");
  CHECK(R.homogenize(poly(R, "x1^2 - x2"), H) == poly(H, "x1^2 - x2*h"));
}
