#pragma once

// Pairs (u, v) with u.f = v, stored by signature; multiplied pairs; the pair
// order, top and regular reduction, and J-pairs.

#include <compare>
#include <optional>
#include <vector>

#include "trb/polynomial.hpp"
#include "trb/signature.hpp"

namespace trb {

template <class K> struct Pair {
  using Element = typename K::Element;

  ModuleMonomial sig;
  /// Coefficient of the signature term in u.
  Element sig_coeff;
  Polynomial<K> v;
  /// Full module element, present only in verification mode.
  std::optional<std::vector<Polynomial<K>>> u;

  bool is_syzygy() const { return v.is_zero(); }
};

using PairId = std::size_t;

/// [m, p]: the value m * p of a stored pair.
struct MultipliedPair {
  Monomial mult;
  PairId carrier = 0;
};

/// Everything the pair calculus needs: ring, signature order, input list.
template <class K> class SigContext {
public:
  using Element = typename K::Element;
  using Poly = Polynomial<K>;

  SigContext(const PolyRing<K> &ring, const SignatureOrder &sord, const std::vector<Poly> &f)
      : ring_(ring), sord_(sord), f_(f) {}

  const PolyRing<K> &ring() const { return ring_; }
  const K &field() const { return ring_.field(); }
  const SignatureOrder &sord() const { return sord_; }
  const std::vector<Poly> &inputs() const { return f_; }

  /// (E_i, f_i); with tracking, u is the unit vector.
  Pair<K> initial_pair(std::size_t i, bool track) const {
    Pair<K> p{{ring_.one_monomial(), i}, field().one(), f_.at(i), std::nullopt};
    if (track) {
      std::vector<Poly> u(f_.size());
      u[i] = ring_.constant(field().one());
      p.u = std::move(u);
    }
    return p;
  }

  Pair<K> multiply(const Monomial &m, const Pair<K> &p) const {
    Pair<K> out{sig_mul(m, p.sig), p.sig_coeff, ring_.mul_monomial(m, p.v), std::nullopt};
    if (p.u) {
      std::vector<Poly> u;
      u.reserve(p.u->size());
      for (const auto &c : *p.u)
        u.push_back(ring_.mul_monomial(m, c));
      out.u = std::move(u);
    }
    return out;
  }

  /// Scales the pair so that v is monic (no-op on syzygies).
  Pair<K> normalized(Pair<K> p) const {
    if (p.is_syzygy() || field().is_one(p.v[0].coeff))
      return p;
    auto c = field().inv(p.v[0].coeff);
    p.v = ring_.scale(c, p.v);
    p.sig_coeff = field().mul(c, p.sig_coeff);
    if (p.u)
      for (auto &comp : *p.u)
        comp = ring_.scale(c, comp);
    return p;
  }

  const Monomial &lm(const Pair<K> &p) const { return ring_.leading_monomial(p.v); }

  /// lm(v1)*sig(p2) against lm(v2)*sig(p1) under the signature order.
  std::strong_ordering pair_compare(const Pair<K> &p1, const Pair<K> &p2) const {
    if (p1.is_syzygy() || p2.is_syzygy())
      throw Error("pair_compare: syzygy operand");
    return sord_.compare(sig_mul(lm(p1), p2.sig), sig_mul(lm(p2), p1.sig));
  }

  bool is_equivalent(const Pair<K> &p1, const Pair<K> &p2) const {
    if (!(p1.sig == p2.sig))
      return false;
    if (p1.is_syzygy() || p2.is_syzygy())
      return p1.is_syzygy() && p2.is_syzygy();
    return lm(p1) == lm(p2);
  }

  bool is_similar(const Pair<K> &p1, const Pair<K> &p2) const {
    if (p1.is_syzygy() || p2.is_syzygy())
      throw Error("is_similar: syzygy operand");
    return p1.sig.index == p2.sig.index &&
           mono_mul(lm(p1), p2.sig.mono) == mono_mul(lm(p2), p1.sig.mono);
  }

  /// p1 is top reducible by p2: both non-syzygy, lm(p2) | lm(p1), p1 <_p p2.
  bool is_top_reducible(const Pair<K> &p1, const Pair<K> &p2) const {
    if (p1.is_syzygy() || p2.is_syzygy())
      return false;
    if (!mono_divides(lm(p2), lm(p1)))
      return false;
    return pair_compare(p1, p2) < 0;
  }

  /// Multiplier m with lm(m*p2) = lm(p1) when p1 is top reducible by p2.
  std::optional<Monomial> top_reducer_multiplier(const Pair<K> &p1, const Pair<K> &p2) const {
    if (!is_top_reducible(p1, p2))
      return std::nullopt;
    return mono_div(lm(p1), lm(p2));
  }

  /// p1 - (lt(p1)/lt(p2)) p2, with the monomial quotient absorbed into p2.
  Pair<K> top_reduce_step(const Pair<K> &p1, const Pair<K> &p2) const {
    if (!is_top_reducible(p1, p2))
      throw Error("top_reduce_step: pair is not top reducible by the reducer");
    return reduce_by(p1, p2);
  }

  /// Regular reducibility; the term-inequality clause uses signature
  /// coefficients: blocked only when m*sig(p2) = sig(p1) and the leading
  /// data are proportional.
  bool is_regular_reducible(const Pair<K> &p1, const Pair<K> &p2) const {
    if (p1.is_syzygy() || p2.is_syzygy())
      return false;
    if (!mono_divides(lm(p2), lm(p1)))
      return false;
    auto c = pair_compare(p1, p2);
    if (c > 0)
      return false;
    if (c < 0)
      return true;
    // m*sig(p2) = sig(p1): compare lt(u1) lt(v2) with lt(u2) lt(v1)
    const auto &F = field();
    return !F.equal(F.mul(p1.sig_coeff, p2.v[0].coeff), F.mul(p2.sig_coeff, p1.v[0].coeff));
  }

  Pair<K> regular_reduce_step(const Pair<K> &p1, const Pair<K> &p2) const {
    if (!is_regular_reducible(p1, p2))
      throw Error("regular_reduce_step: pair is not regular reducible by the reducer");
    return reduce_by(p1, p2);
  }

  /// J-pair of two stored pairs; empty when either is a syzygy or they are similar.
  std::optional<MultipliedPair> j_pair(const Pair<K> &p1, PairId id1, const Pair<K> &p2,
                                       PairId id2) const {
    if (p1.is_syzygy() || p2.is_syzygy())
      return std::nullopt;
    auto c = pair_compare(p1, p2);
    if (c == 0)
      return std::nullopt;
    const Monomial l = mono_lcm(lm(p1), lm(p2));
    if (c < 0)
      return MultipliedPair{mono_div(l, lm(p1)), id1};
    return MultipliedPair{mono_div(l, lm(p2)), id2};
  }

  /// sig(v * p): the largest t * sig(p) over the terms t of v. Equals
  /// lm(v) sig(p) when the orders are compatible.
  ModuleMonomial product_signature(const Poly &v, const ModuleMonomial &sig) const {
    if (v.is_zero())
      throw Error("product_signature: zero polynomial");
    ModuleMonomial best = sig_mul(v[0].mono, sig);
    for (std::size_t k = 1; k < v.size(); ++k) {
      auto s = sig_mul(v[k].mono, sig);
      if (sord_.less(best, s))
        best = std::move(s);
    }
    return best;
  }

  /// Koszul signature max(sig(v2 p1), sig(v1 p2)), empty when equal.
  std::optional<ModuleMonomial> koszul_signature(const Pair<K> &p1, const Pair<K> &p2) const {
    if (p1.is_syzygy() || p2.is_syzygy())
      throw Error("koszul_signature: syzygy operand");
    auto a = product_signature(p2.v, p1.sig);
    auto b = product_signature(p1.v, p2.sig);
    auto c = sord_.compare(a, b);
    if (c == 0)
      return std::nullopt;
    return c > 0 ? a : b;
  }

  /// u.f = v and lm(u) = sig with the tracked coefficient.
  bool check_pair_invariant(const Pair<K> &p) const {
    if (!p.u)
      throw Error("check_pair_invariant: module element not tracked");
    const auto &u = *p.u;
    if (u.size() != f_.size())
      return false;
    Poly dot;
    for (std::size_t i = 0; i < u.size(); ++i)
      dot = ring_.add(dot, ring_.mul(u[i], f_[i]));
    if (!(dot == p.v))
      return false;
    auto lt = module_leading_term(u);
    return lt && lt->first == p.sig && field().equal(lt->second, p.sig_coeff);
  }

  /// Leading module term of u under the signature order.
  std::optional<std::pair<ModuleMonomial, Element>>
  module_leading_term(const std::vector<Poly> &u) const {
    std::optional<std::pair<ModuleMonomial, Element>> best;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero())
        continue;
      for (const auto &t : u[i]) {
        ModuleMonomial s{t.mono, i};
        if (!best || sord_.compare(s, best->first) > 0)
          best = std::make_pair(s, t.coeff);
      }
    }
    return best;
  }

private:
  Pair<K> reduce_by(const Pair<K> &p1, const Pair<K> &p2) const {
    const auto &F = field();
    const Monomial m = mono_div(lm(p1), lm(p2));
    const Element c = F.div(p1.v[0].coeff, p2.v[0].coeff);
    Pair<K> out = p1;
    out.v = ring_.sub_scaled(p1.v, c, m, p2.v);
    if (sig_mul(m, p2.sig) == p1.sig)
      out.sig_coeff = F.sub(p1.sig_coeff, F.mul(c, p2.sig_coeff));
    if (p1.u && p2.u) {
      auto &u = *out.u;
      for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = ring_.sub_scaled(u[i], c, m, (*p2.u)[i]);
    } else {
      out.u.reset();
    }
    return out;
  }

  const PolyRing<K> &ring_;
  const SignatureOrder &sord_;
  const std::vector<Poly> &f_;
};

} // namespace trb
