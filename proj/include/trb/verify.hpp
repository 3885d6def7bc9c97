#pragma once

// Independent oracles: plain Buchberger, Groebner basis checks and a
// brute-force enumerator of TRP/TRB pairs by linear algebra per degree.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trb/pair.hpp"

namespace trb {

template <class K>
Polynomial<K> s_polynomial(const PolyRing<K> &ring, const Polynomial<K> &g1,
                           const Polynomial<K> &g2) {
  if (g1.is_zero() || g2.is_zero())
    throw Error("s_polynomial: zero operand");
  const auto &F = ring.field();
  const Monomial l = mono_lcm(ring.leading_monomial(g1), ring.leading_monomial(g2));
  auto a = ring.scale(F.inv(ring.leading_coeff(g1)), mono_div(l, ring.leading_monomial(g1)), g1);
  auto b = ring.scale(F.inv(ring.leading_coeff(g2)), mono_div(l, ring.leading_monomial(g2)), g2);
  return ring.sub(a, b);
}

/// Full multivariate division remainder.
template <class K>
Polynomial<K> normal_form(const PolyRing<K> &ring, Polynomial<K> p,
                          const std::vector<Polynomial<K>> &G) {
  const auto &F = ring.field();
  std::vector<Term<K>> rem;
  while (!p.is_zero()) {
    const auto &lt = p[0];
    const Polynomial<K> *div = nullptr;
    for (const auto &g : G)
      if (!g.is_zero() && mono_divides(ring.leading_monomial(g), lt.mono)) {
        div = &g;
        break;
      }
    if (!div) {
      rem.push_back(lt);
      p = Polynomial<K>(std::vector<Term<K>>(p.terms().begin() + 1, p.terms().end()));
      continue;
    }
    auto c = F.div(lt.coeff, ring.leading_coeff(*div));
    p = ring.sub_scaled(p, c, mono_div(lt.mono, ring.leading_monomial(*div)), *div);
  }
  return Polynomial<K>(std::move(rem));
}

/// Pair-queue Buchberger without pair criteria; pairs are processed first in, first out.
template <class K>
std::vector<Polynomial<K>> buchberger(const PolyRing<K> &ring, const std::vector<Polynomial<K>> &f) {
  std::vector<Polynomial<K>> G;
  for (const auto &p : f) {
    if (p.is_zero())
      throw Error("buchberger: zero input polynomial");
    G.push_back(ring.monic(p));
  }
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      queue.emplace_back(i, j);
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    auto r = normal_form(ring, s_polynomial(ring, G[i], G[j]), G);
    if (r.is_zero())
      continue;
    G.push_back(ring.monic(r));
    for (std::size_t k = 0; k + 1 < G.size(); ++k)
      queue.emplace_back(k, G.size() - 1);
  }
  return G;
}

template <class K>
bool is_groebner_basis(const PolyRing<K> &ring, const std::vector<Polynomial<K>> &G) {
  for (const auto &g : G)
    if (g.is_zero())
      throw Error("is_groebner_basis: zero element");
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(ring, s_polynomial(ring, G[i], G[j]), G).is_zero())
        return false;
  return true;
}

/// Leading monomials with every non-minimal (divisible) one removed, sorted structurally.
template <class K>
std::vector<Monomial> minimal_leading_monomials(const PolyRing<K> &ring,
                                                const std::vector<Polynomial<K>> &G) {
  std::vector<Monomial> lms;
  for (const auto &g : G) {
    if (g.is_zero())
      throw Error("minimal_leading_monomials: zero element");
    lms.push_back(ring.leading_monomial(g));
  }
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lms.size() && !redundant; ++j) {
      if (i == j || !mono_divides(lms[j], lms[i]))
        continue;
      // strict divisor, or an equal one that comes first
      redundant = !(lms[j] == lms[i]) || j < i;
    }
    if (!redundant)
      out.push_back(lms[i]);
  }
  std::sort(out.begin(), out.end(), StructuralLess{});
  return out;
}

template <class K>
bool leading_ideal_equal(const PolyRing<K> &ring, const std::vector<Polynomial<K>> &G1,
                         const std::vector<Polynomial<K>> &G2) {
  auto a = minimal_leading_monomials(ring, G1);
  auto b = minimal_leading_monomials(ring, G2);
  auto covered = [](const std::vector<Monomial> &xs, const std::vector<Monomial> &ys) {
    for (const auto &x : xs)
      if (std::none_of(ys.begin(), ys.end(), [&](const Monomial &y) { return mono_divides(y, x); }))
        return false;
    return true;
  };
  return covered(a, b) && covered(b, a);
}

/// All exponent vectors of total degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(n, 0);
  auto rec = [&](auto &&self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == n) {
      e[i] = static_cast<Monomial::Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) {
      e[i] = static_cast<Monomial::Exponent>(k);
      self(self, i + 1, left - k);
    }
  };
  if (n == 0)
    return out;
  rec(rec, 0, d);
  return out;
}

/// Every exponent vector dividing m.
inline std::vector<Monomial> divisors_of(const Monomial &m) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(m.nvars(), 0);
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == m.nvars()) {
      out.emplace_back(e);
      return;
    }
    for (Monomial::Exponent k = 0; k <= m[i]; ++k) {
      e[i] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// TRP data for every signature up to a total degree bound.
struct BruteForceTrb {
  struct Entry {
    ModuleMonomial sig;
    /// Minimal leading monomial over pairs signed sig; empty for syzygy signatures.
    std::optional<Monomial> trp_lm;
    /// Every leading monomial some pair signed sig can have (ascending).
    std::vector<Monomial> achievable;
  };
  std::uint64_t degree_bound = 0;
  std::vector<Entry> entries;
  /// TRB classes: (signature, leading monomial).
  std::vector<std::pair<ModuleMonomial, Monomial>> trb;

  const Entry *find(const ModuleMonomial &s) const {
    for (const auto &e : entries)
      if (e.sig == s)
        return &e;
    return nullptr;
  }
};

/// Total degree deg(x^a) + deg(f_i) of a signature.
template <class K>
std::uint64_t signature_total_degree(const PolyRing<K> &ring, const std::vector<Polynomial<K>> &f,
                                     const ModuleMonomial &s) {
  return s.mono.degree() + ring.total_degree(f.at(s.index));
}

/// Enumerates signatures s with deg(s) + deg(f_i) <= bound. Pairs signed s
/// are x^a f_i plus combinations of lower-signed products of the same degree,
/// so the minimal leading monomial is that of x^a f_i fully reduced against an
/// echelon basis of the lower products. Needs homogeneous input, a graded
/// monomial order and a compatible signature order.
template <class K>
BruteForceTrb brute_force_trb(const PolyRing<K> &ring, const std::vector<Polynomial<K>> &f,
                              const SignatureOrder &sord, std::uint64_t bound) {
  for (const auto &g : f)
    if (g.is_zero() || !ring.is_homogeneous(g))
      throw Error("brute_force_trb: inputs must be nonzero and homogeneous");
  if (!ring.order().is_degree_compatible())
    throw Error("brute_force_trb: the monomial order must be degree-compatible");
  if (check_compatibility(ring.order(), sord).status != Compatibility::Compatible)
    throw Error("brute_force_trb: monomial and signature orders must be compatible");
  const auto &F = ring.field();
  const std::size_t n = ring.nvars();
  BruteForceTrb out;
  out.degree_bound = bound;
  std::map<std::pair<std::size_t, std::vector<Monomial::Exponent>>, std::optional<Monomial>> trp;

  for (std::uint64_t D = 0; D <= bound; ++D) {
    std::vector<ModuleMonomial> sigs;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto di = ring.total_degree(f[i]);
      if (di > D)
        continue;
      for (auto &m : monomials_of_degree(n, D - di))
        sigs.push_back({std::move(m), i});
    }
    std::sort(sigs.begin(), sigs.end(),
              [&](const ModuleMonomial &a, const ModuleMonomial &b) { return sord.less(a, b); });
    // echelon basis: pivot monomial -> monic polynomial with that leading monomial
    std::unordered_map<Monomial, Polynomial<K>, MonomialHash> pivots;
    std::vector<Monomial> pivot_list;
    for (const auto &s : sigs) {
      auto r = ring.mul_monomial(s.mono, f[s.index]);
      while (!r.is_zero()) {
        auto it = pivots.find(r[0].mono);
        if (it == pivots.end())
          break;
        r = ring.sub_scaled(r, r[0].coeff, ring.one_monomial(), it->second);
      }
      BruteForceTrb::Entry e{s, std::nullopt, {}};
      if (!r.is_zero())
        e.trp_lm = r[0].mono;
      for (const auto &p : pivot_list)
        if (!e.trp_lm || ring.order().compare(p, *e.trp_lm) > 0)
          e.achievable.push_back(p);
      if (e.trp_lm)
        e.achievable.push_back(*e.trp_lm);
      std::sort(e.achievable.begin(), e.achievable.end(),
                [&](const Monomial &a, const Monomial &b) { return ring.order().less(a, b); });
      trp[{s.index, s.mono.exponents()}] = e.trp_lm;
      out.entries.push_back(std::move(e));
      if (!r.is_zero()) {
        Monomial lead = r[0].mono;
        pivots.emplace(lead, ring.scale(F.inv(r[0].coeff), r));
        pivot_list.push_back(std::move(lead));
      }
    }
  }

  for (const auto &e : out.entries) {
    if (!e.trp_lm)
      continue;
    bool minimal = true;
    for (const auto &t : divisors_of(e.sig.mono)) {
      if (t.is_one())
        continue;
      auto it = trp.find({e.sig.index, mono_div(e.sig.mono, t).exponents()});
      if (it != trp.end() && it->second && mono_mul(*it->second, t) == *e.trp_lm) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      out.trb.emplace_back(e.sig, *e.trp_lm);
  }
  return out;
}

/// A pair signed s with leading monomial L is top reducible by the TRB
/// representative (s', L') when L' | L and L s' <_s L' s.
inline bool trb_reduces(const SignatureOrder &sord, const ModuleMonomial &s, const Monomial &L,
                        const ModuleMonomial &s2, const Monomial &L2) {
  return mono_divides(L2, L) && sord.less(sig_mul(L, s2), sig_mul(L2, s));
}

/// Checks that every non-TRP pair of the enumerated universe is top reducible
/// by some TRB class. Returns the first counterexample, if any.
inline std::optional<std::pair<ModuleMonomial, Monomial>>
trb_reduction_counterexample(const SignatureOrder &sord, const BruteForceTrb &bf) {
  for (const auto &e : bf.entries) {
    for (const auto &L : e.achievable) {
      if (e.trp_lm && L == *e.trp_lm)
        continue;
      bool ok = std::any_of(bf.trb.begin(), bf.trb.end(), [&](const auto &c) {
        return trb_reduces(sord, e.sig, L, c.first, c.second);
      });
      if (!ok)
        return std::make_pair(e.sig, L);
    }
  }
  return std::nullopt;
}

} // namespace trb
