#pragma once

// Pair-rejection predicates and their shared state: the Rules list, the
// syzygy signature sets and the signature memory.

#include <array>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trb/pair.hpp"

namespace trb {

enum class Criterion { Syzygy, Rewritten, ESyzygy, ERewritten, SRewritten, GSyzygy, Signature, Mpair };

inline constexpr std::array<Criterion, 8> kAllCriteria = {
    Criterion::Syzygy,     Criterion::Rewritten, Criterion::ESyzygy,   Criterion::ERewritten,
    Criterion::SRewritten, Criterion::GSyzygy,   Criterion::Signature, Criterion::Mpair};

inline std::string criterion_name(Criterion c) {
  switch (c) {
  case Criterion::Syzygy:
    return "syzygy";
  case Criterion::Rewritten:
    return "rewritten";
  case Criterion::ESyzygy:
    return "esyzygy";
  case Criterion::ERewritten:
    return "erewritten";
  case Criterion::SRewritten:
    return "srewritten";
  case Criterion::GSyzygy:
    return "gsyzygy";
  case Criterion::Signature:
    return "signature";
  case Criterion::Mpair:
    return "mpair";
  }
  return "?";
}

inline std::optional<Criterion> parse_criterion(const std::string &name) {
  for (auto c : kAllCriteria)
    if (criterion_name(c) == name)
      return c;
  return std::nullopt;
}

/// Signatures kept as a divisibility antichain; membership means "divisible by some element".
class SyzygySet {
public:
  /// Returns false when an existing element already divides s.
  bool insert(const ModuleMonomial &s) {
    if (divides_any(s))
      return false;
    std::erase_if(elems_, [&](const ModuleMonomial &e) { return sig_divides(s, e); });
    elems_.push_back(s);
    return true;
  }
  bool divides_any(const ModuleMonomial &s) const {
    for (const auto &e : elems_)
      if (sig_divides(e, s))
        return true;
    return false;
  }
  const std::vector<ModuleMonomial> &elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

private:
  std::vector<ModuleMonomial> elems_;
};

/// Rewrite rules, most recently prepended first. Entries are storage ids, so a
/// reduction written back into the store substitutes the entry in place.
class RulesList {
public:
  void prepend(PairId id) { entries_.push_back(id); }

  /// First entry (from the head) whose signature divides s.
  template <class K>
  std::optional<PairId> first_divisor(const std::deque<Pair<K>> &store,
                                      const ModuleMonomial &s) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (sig_divides(store[*it].sig, s))
        return *it;
    return std::nullopt;
  }

  /// Head first.
  std::vector<PairId> entries() const { return {entries_.rbegin(), entries_.rend()}; }
  std::size_t size() const { return entries_.size(); }

private:
  std::vector<PairId> entries_;
};

/// Read-only view of the pair store and the DONE list.
template <class K> struct DoneView {
  const SigContext<K> &ctx;
  const std::deque<Pair<K>> &store;
  const std::vector<PairId> &done;
};

/// Some DONE pair p1 of larger index than the carrier has lm(v1)E_i | sig(mp).
template <class K>
bool syzygy_criterion(const DoneView<K> &view, const ModuleMonomial &sig_mp) {
  for (PairId id : view.done) {
    const auto &p1 = view.store[id];
    if (p1.is_syzygy() || p1.sig.index <= sig_mp.index)
      continue;
    if (mono_divides(view.ctx.lm(p1), sig_mp.mono))
      return true;
  }
  return false;
}

/// The first Rules entry dividing sig(mp) is not the carrier.
template <class K>
bool rewritten_criterion(const RulesList &rules, const std::deque<Pair<K>> &store, PairId carrier,
                         const ModuleMonomial &sig_mp) {
  auto first = rules.first_divisor(store, sig_mp);
  return first && *first != carrier;
}

inline bool esyzygy_criterion(const SyzygySet &syz, const ModuleMonomial &sig_mp) {
  return syz.divides_any(sig_mp);
}

inline bool gsyzygy_criterion(const SyzygySet &syz, const ModuleMonomial &sig_mp) {
  return syz.divides_any(sig_mp);
}

/// Adds lm(p)E_i for every input index i with (E_i, f_i) <_p p.
template <class K> void esyzygy_populate(SyzygySet &syz, const SigContext<K> &ctx, const Pair<K> &p) {
  if (p.is_syzygy())
    return;
  const auto &f = ctx.inputs();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const ModuleMonomial ei{ctx.ring().one_monomial(), i};
    // (E_i, f_i) <_p p  <=>  lm(f_i) sig(p) <_s lm(p) E_i
    if (ctx.sord().less(sig_mul(ctx.ring().leading_monomial(f[i]), p.sig),
                        sig_mul(ctx.lm(p), ei)))
      syz.insert(sig_mul(ctx.lm(p), ei));
  }
}

/// Some DONE p' has sig(p') | sig(mp) and sig(p') >_s sig(p).
template <class K>
bool erewritten_criterion(const DoneView<K> &view, const Pair<K> &carrier,
                          const ModuleMonomial &sig_mp) {
  for (PairId id : view.done) {
    const auto &q = view.store[id];
    if (sig_divides(q.sig, sig_mp) && view.ctx.sord().less(carrier.sig, q.sig))
      return true;
  }
  return false;
}

/// ERewritten, or some other DONE p2 with sig(m2 p2) = sig(mp), sig(p2) of the
/// same index and degree as sig(p), and [m2, p2] not currently in TODO.
template <class K>
bool srewritten_criterion(const DoneView<K> &view, PairId carrier, const ModuleMonomial &sig_mp,
                          const std::function<bool(PairId, const ModuleMonomial &)> &in_todo) {
  const auto &p = view.store[carrier];
  if (erewritten_criterion(view, p, sig_mp))
    return true;
  for (PairId id : view.done) {
    if (id == carrier)
      continue;
    const auto &q = view.store[id];
    if (!sig_divides(q.sig, sig_mp))
      continue;
    if (f5_compare(q.sig.index, q.sig.mono.degree(), p.sig.index, p.sig.mono.degree()) != 0)
      continue;
    if (!in_todo(id, sig_mp))
      return true;
  }
  return false;
}

/// Blocks when s already passed; otherwise records it.
inline bool signature_criterion(std::set<ModuleMonomial, ModuleMonomialLess> &passed,
                                const ModuleMonomial &sig_mp) {
  return !passed.insert(sig_mp).second;
}

/// [mult, carrier] is the minimal multiplied pair over DONE signed s = mult * sig(carrier).
template <class K>
bool is_m_pair(const DoneView<K> &view, PairId carrier, const Monomial &mult) {
  if (mult.is_one())
    throw Error("is_m_pair: multiplier must differ from 1");
  const auto &ctx = view.ctx;
  const auto &p0 = view.store[carrier];
  if (p0.is_syzygy())
    return false;
  const ModuleMonomial s = sig_mul(mult, p0.sig);
  for (PairId id : view.done) {
    const auto &q = view.store[id];
    if (q.is_syzygy() || q.sig == s || !sig_divides(q.sig, s))
      continue;
    if (ctx.is_equivalent(p0, q))
      continue;
    auto c = ctx.pair_compare(p0, q);
    if (c < 0)
      continue;
    if (c == 0 && ctx.sord().less(q.sig, p0.sig))
      continue;
    return false;
  }
  return true;
}

template <class K>
bool mpair_criterion(const DoneView<K> &view, bool initial, PairId carrier, const Monomial &mult) {
  if (initial)
    return false;
  if (mult.is_one())
    return true;
  return !is_m_pair(view, carrier, mult);
}

enum class StoreCheck { General, Gvw, Always };

inline std::string store_check_name(StoreCheck s) {
  switch (s) {
  case StoreCheck::General:
    return "general";
  case StoreCheck::Gvw:
    return "gvw";
  case StoreCheck::Always:
    return "always";
  }
  return "?";
}

/// True when the reduced pair should be stored.
template <class K>
bool check_store(StoreCheck kind, const DoneView<K> &view, const Pair<K> &reduced,
                 const Pair<K> &input, bool initial) {
  if (kind == StoreCheck::Always || initial)
    return true;
  const auto &ctx = view.ctx;
  if (kind == StoreCheck::General)
    return !ctx.is_equivalent(reduced, input);
  for (PairId id : view.done) {
    const auto &q = view.store[id];
    if (!sig_divides(q.sig, reduced.sig))
      continue;
    if (reduced.is_syzygy() || q.is_syzygy()) {
      if (reduced.is_syzygy() && q.is_syzygy())
        return false;
      continue;
    }
    if (mono_mul(sig_div(reduced.sig, q.sig), ctx.lm(q)) == ctx.lm(reduced))
      return false;
  }
  return true;
}

} // namespace trb
