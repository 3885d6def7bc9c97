#pragma once

// The generic TRB loop and the shipped strategy bundles.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trb/criteria.hpp"
#include "trb/pair.hpp"

namespace trb {

enum class Reducer { F5, Top };

struct BundleRequirements {
  bool homogeneous = false;
  bool graded_order = false;
  bool compatible = false;
  /// Empty means every signature order is accepted.
  std::vector<SignatureOrderKind> orders;
};

struct StrategyBundle {
  std::string name;
  /// Evaluated in this order; the first one that blocks is counted.
  std::vector<Criterion> criteria;
  Reducer reducer = Reducer::Top;
  StoreCheck store_check = StoreCheck::General;
  bool rules_update = false;
  bool keep_syzygies = true;
  BundleRequirements requirements;

  bool uses(Criterion c) const {
    return std::find(criteria.begin(), criteria.end(), c) != criteria.end();
  }

  static StrategyBundle f5() {
    return {"trb-f5",
            {Criterion::Syzygy, Criterion::Rewritten},
            Reducer::F5,
            StoreCheck::General,
            true,
            false,
            {true, true, false, {SignatureOrderKind::Pot}}};
  }
  static StrategyBundle ef5() {
    return {"trb-ef5",
            {Criterion::ESyzygy, Criterion::ERewritten},
            Reducer::F5,
            StoreCheck::General,
            false,
            false,
            {true,
             true,
             false,
             {SignatureOrderKind::Pot, SignatureOrderKind::Schreyer,
              SignatureOrderKind::SchreyerLiteral, SignatureOrderKind::DegreeFirst}}};
  }
  static StrategyBundle gvw() {
    return {"trb-gvw",
            {Criterion::GSyzygy, Criterion::Signature},
            Reducer::Top,
            StoreCheck::General,
            false,
            true,
            {}};
  }
  static StrategyBundle mj() {
    return {"trb-mj",
            {Criterion::GSyzygy, Criterion::Mpair},
            Reducer::Top,
            StoreCheck::Always,
            false,
            true,
            {false, false, true, {}}};
  }
  static StrategyBundle srewritten() {
    return {"trb-srewritten",
            {Criterion::GSyzygy, Criterion::SRewritten},
            Reducer::Top,
            StoreCheck::General,
            false,
            true,
            {true, true, false, {}}};
  }

  /// Accepts "f5", "trb-f5", ... Throws on unknown names.
  static StrategyBundle by_name(const std::string &name) {
    std::string n = name.rfind("trb-", 0) == 0 ? name.substr(4) : name;
    if (n == "f5")
      return f5();
    if (n == "ef5")
      return ef5();
    if (n == "gvw")
      return gvw();
    if (n == "mj")
      return mj();
    if (n == "srewritten")
      return srewritten();
    throw Error("unknown algorithm '" + name + "' (expected f5, ef5, gvw, mj or srewritten)");
  }
};

struct EngineOptions {
  std::uint64_t max_steps = 1000000;
  bool track_module = false;
  bool regular_reductions = false;
  bool record_trace = false;
};

struct Stats {
  std::uint64_t selections = 0;
  std::map<Criterion, std::uint64_t> blocked;
  std::uint64_t reductions_performed = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t stored = 0;
  std::uint64_t rejected = 0;
  std::uint64_t syzygies_found = 0;
  std::uint64_t jpairs_generated = 0;
  std::uint64_t steps_used = 0;
  bool terminated = false;
  /// Signature of every blocked selection, with the blocking criterion.
  std::vector<std::pair<Criterion, ModuleMonomial>> blocked_at;

  std::uint64_t blocked_total() const {
    std::uint64_t t = 0;
    for (const auto &[c, n] : blocked)
      t += n;
    return t;
  }
  std::uint64_t blocked_count(Criterion c) const {
    auto it = blocked.find(c);
    return it == blocked.end() ? 0 : it->second;
  }
};

struct TraceEvent {
  ModuleMonomial sig;
  Monomial mult;
  PairId carrier = 0;
  bool initial = false;
  std::optional<Criterion> blocked_by;
  /// Set when the selection was reduced.
  std::optional<Monomial> output_lm;
  bool output_syzygy = false;
  bool stored = false;
  std::uint64_t reduction_steps = 0;
};

template <class K> struct EngineResult {
  std::vector<Pair<K>> done;
  Stats stats;
  std::vector<TraceEvent> trace;

  std::vector<Polynomial<K>> basis() const {
    std::vector<Polynomial<K>> out;
    for (const auto &p : done)
      if (!p.is_syzygy())
        out.push_back(p.v);
    return out;
  }
};

/// Throws Error with a remediation hint when the bundle cannot run on this input.
template <class K>
void validate_bundle(const StrategyBundle &bundle, const PolyRing<K> &ring,
                     const std::vector<Polynomial<K>> &f, const SignatureOrder &sord) {
  if (f.empty())
    throw Error("empty input list");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero())
      throw Error("input polynomial f" + std::to_string(i + 1) + " is zero; remove it");
    if (bundle.requirements.homogeneous && !ring.is_homogeneous(f[i]))
      throw Error(bundle.name + " requires homogeneous input; f" + std::to_string(i + 1) +
                  " is not homogeneous (use --homogenize)");
  }
  if (sord.ncomponents() != f.size())
    throw Error("signature order has " + std::to_string(sord.ncomponents()) +
                " components but the input has " + std::to_string(f.size()) + " polynomials");
  if (bundle.requirements.graded_order && !ring.order().is_degree_compatible())
    throw Error(bundle.name + " requires a degree-compatible monomial order; got " +
                ring.order().name() + " (use grevlex or grlex)");
  const auto &allowed = bundle.requirements.orders;
  if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), sord.kind()) == allowed.end()) {
    std::string names;
    for (auto k : allowed) {
      if (!names.empty())
        names += ", ";
      names += signature_order_kind_name(k);
    }
    throw Error(bundle.name + " does not support the " + sord.name() +
                " signature order (supported: " + names + ")");
  }
  if (bundle.requirements.compatible) {
    auto v = check_compatibility(ring.order(), sord);
    if (v.status != Compatibility::Compatible)
      throw Error(bundle.name + " requires compatible monomial and signature orders: " + v.detail);
  }
}

/// One TRB run. Holds copies of the ring, input and orders so that the pair
/// calculus can refer to them; not copyable or movable.
template <class K> class Engine {
public:
  using Poly = Polynomial<K>;

  struct TodoEntry {
    Monomial mult;
    PairId carrier = 0;
    ModuleMonomial sig;
    Monomial lm;
    bool initial = false;
    bool in_rules = false;
    std::uint64_t seq = 0;
  };

  Engine(PolyRing<K> ring, std::vector<Poly> f, SignatureOrder sord, StrategyBundle bundle,
         EngineOptions options = {})
      : ring_(std::move(ring)), f_(std::move(f)), sord_(std::move(sord)),
        bundle_(std::move(bundle)), options_(options), ctx_(ring_, sord_, f_),
        todo_(TodoLess{this}) {
    validate_bundle(bundle_, ring_, f_, sord_);
    if (options_.max_steps < 1)
      throw Error("max_steps must be at least 1");
    for (std::size_t i = 0; i < f_.size(); ++i) {
      store_.push_back(ctx_.initial_pair(i, options_.track_module));
      push_todo(ring_.one_monomial(), store_.size() - 1, true);
    }
  }
  Engine(const Engine &) = delete;
  Engine &operator=(const Engine &) = delete;

  /// Runs one loop iteration. Returns false once TODO is empty or the step cap is hit.
  bool step() {
    if (todo_.empty()) {
      stats_.terminated = true;
      return false;
    }
    if (stats_.steps_used >= options_.max_steps)
      return false;
    if (bundle_.rules_update)
      rules_pre_selection_update();

    TodoEntry e = *todo_.begin();
    erase_todo(todo_.begin());
    ++stats_.steps_used;
    ++stats_.selections;
    last_selected_ = e.sig;

    TraceEvent ev{e.sig, e.mult, e.carrier, e.initial, std::nullopt, std::nullopt, false, false, 0};
    auto blocked_by = blocking_criterion(e);
    remember_signature(e.sig, blocked_by);
    if (auto c = blocked_by) {
      ++stats_.blocked[*c];
      stats_.blocked_at.emplace_back(*c, e.sig);
      ev.blocked_by = c;
      record(std::move(ev));
      return true;
    }

    const Pair<K> input = ctx_.multiply(e.mult, store_[e.carrier]);
    std::uint64_t steps = 0;
    Pair<K> out = ctx_.normalized(reduce(input, steps));
    ++stats_.reductions_performed;
    stats_.reduction_steps += steps;
    ev.reduction_steps = steps;
    ev.output_syzygy = out.is_syzygy();
    if (!out.is_syzygy())
      ev.output_lm = ctx_.lm(out);
    if (e.in_rules)
      store_[e.carrier] = out;

    if (!check_store(bundle_.store_check, view(), out, input, e.initial)) {
      ++stats_.rejected;
      record(std::move(ev));
      return true;
    }
    if (out.is_syzygy()) {
      ++stats_.syzygies_found;
      if (bundle_.keep_syzygies) {
        gsyz_.insert(out.sig);
        PairId id = e.in_rules ? e.carrier : push_store(std::move(out));
        done_.push_back(id);
        ++stats_.stored;
        ev.stored = true;
      }
      record(std::move(ev));
      return true;
    }
    PairId id = e.in_rules ? e.carrier : push_store(std::move(out));
    store_pair(id);
    ev.stored = true;
    record(std::move(ev));
    return true;
  }

  EngineResult<K> run() {
    while (step()) {
    }
    return result();
  }

  EngineResult<K> result() const {
    EngineResult<K> r;
    for (PairId id : done_)
      r.done.push_back(store_[id]);
    r.stats = stats_;
    r.trace = trace_;
    return r;
  }

  const PolyRing<K> &ring() const { return ring_; }
  const std::vector<Poly> &inputs() const { return f_; }
  const SignatureOrder &sord() const { return sord_; }
  const SigContext<K> &context() const { return ctx_; }
  const StrategyBundle &bundle() const { return bundle_; }
  const Stats &stats() const { return stats_; }
  const std::deque<Pair<K>> &store() const { return store_; }
  const std::vector<PairId> &done() const { return done_; }
  const RulesList &rules() const { return rules_; }
  std::vector<TodoEntry> todo() const { return {todo_.begin(), todo_.end()}; }
  const std::optional<ModuleMonomial> &last_selected() const { return last_selected_; }
  const SyzygySet &gsyzygies() const { return gsyz_; }
  const SyzygySet &esyzygies() const { return esyz_; }
  DoneView<K> view() const { return {ctx_, store_, done_}; }

  /// Criteria evaluation without counting or recording, for a multiplied pair over DONE.
  bool passes_criteria(PairId carrier, const Monomial &mult) const {
    TodoEntry e{mult, carrier, sig_mul(mult, store_[carrier].sig), Monomial(), false, false, 0};
    return !blocking_criterion(e);
  }

private:
  struct TodoLess {
    const Engine *engine;
    bool operator()(const TodoEntry &a, const TodoEntry &b) const {
      if (auto c = engine->sord_.compare(a.sig, b.sig); c != 0)
        return c < 0;
      if (auto c = engine->ring_.order().compare(a.lm, b.lm); c != 0)
        return c < 0;
      return a.seq < b.seq;
    }
  };
  using TodoKey = std::pair<PairId, std::vector<Monomial::Exponent>>;

  PairId push_store(Pair<K> p) {
    store_.push_back(std::move(p));
    return store_.size() - 1;
  }

  void push_todo(const Monomial &mult, PairId carrier, bool initial, bool in_rules = false,
                 std::optional<std::uint64_t> seq = std::nullopt) {
    const auto &p = store_[carrier];
    TodoEntry e{mult, carrier, sig_mul(mult, p.sig), mono_mul(mult, ctx_.lm(p)), initial,
                in_rules, seq ? *seq : next_seq_++};
    ++todo_keys_[{carrier, e.sig.mono.exponents()}];
    todo_.insert(std::move(e));
  }

  void erase_todo(typename std::set<TodoEntry, TodoLess>::iterator it) {
    auto key = TodoKey{it->carrier, it->sig.mono.exponents()};
    if (--todo_keys_[key] == 0)
      todo_keys_.erase(key);
    todo_.erase(it);
  }

  bool in_todo(PairId carrier, const ModuleMonomial &sig) const {
    return todo_keys_.count({carrier, sig.mono.exponents()}) > 0;
  }

  /// First criterion of the bundle that blocks e. Nothing is recorded.
  std::optional<Criterion> blocking_criterion(const TodoEntry &e) const {
    const auto v = view();
    for (Criterion c : bundle_.criteria) {
      bool blocked = false;
      switch (c) {
      case Criterion::Syzygy:
        blocked = syzygy_criterion(v, e.sig);
        break;
      case Criterion::Rewritten:
        blocked = rewritten_criterion(rules_, store_, e.carrier, e.sig);
        break;
      case Criterion::ESyzygy:
        blocked = esyzygy_criterion(esyz_, e.sig);
        break;
      case Criterion::ERewritten:
        blocked = erewritten_criterion(v, store_[e.carrier], e.sig);
        break;
      case Criterion::SRewritten:
        blocked = srewritten_criterion<K>(
            v, e.carrier, e.sig,
            [this](PairId id, const ModuleMonomial &s) { return in_todo(id, s); });
        break;
      case Criterion::GSyzygy:
        blocked = gsyzygy_criterion(gsyz_, e.sig);
        break;
      case Criterion::Signature:
        blocked = passed_.count(e.sig) > 0;
        break;
      case Criterion::Mpair:
        blocked = mpair_criterion(v, e.initial, e.carrier, e.mult);
        break;
      }
      if (blocked)
        return c;
    }
    return std::nullopt;
  }

  /// The Signature criterion remembers s once the selection got past it.
  void remember_signature(const ModuleMonomial &s, std::optional<Criterion> blocked_by) {
    const auto &cs = bundle_.criteria;
    auto sig_pos = std::find(cs.begin(), cs.end(), Criterion::Signature);
    if (sig_pos == cs.end())
      return;
    if (blocked_by && std::find(cs.begin(), cs.end(), *blocked_by) <= sig_pos)
      return;
    signature_criterion(passed_, s);
  }

  /// Filter for F5 reducers: the multiple [m, q] passes every criterion of the
  /// bundle except the stateful Signature memory.
  bool reducer_passes(PairId q, const Monomial &m) const {
    TodoEntry e{m, q, sig_mul(m, store_[q].sig), Monomial(), false, false, 0};
    auto c = blocking_criterion(e);
    return !c || *c == Criterion::Signature;
  }

  Pair<K> reduce(Pair<K> p, std::uint64_t &steps) {
    while (!p.is_syzygy()) {
      std::optional<PairId> reducer;
      for (PairId id : done_) {
        const auto &q = store_[id];
        bool ok = options_.regular_reductions ? ctx_.is_regular_reducible(p, q)
                                              : ctx_.is_top_reducible(p, q);
        if (!ok)
          continue;
        if (bundle_.reducer == Reducer::F5 && !reducer_passes(id, mono_div(ctx_.lm(p), ctx_.lm(q))))
          continue;
        reducer = id;
        break;
      }
      if (!reducer)
        break;
      p = options_.regular_reductions ? ctx_.regular_reduce_step(p, store_[*reducer])
                                      : ctx_.top_reduce_step(p, store_[*reducer]);
      ++steps;
    }
    return p;
  }

  /// Appends a non-syzygy pair to DONE after queueing its J-pairs.
  void store_pair(PairId id) {
    const auto &p = store_[id];
    for (PairId q : done_) {
      const auto &other = store_[q];
      if (other.is_syzygy())
        continue;
      if (auto j = ctx_.j_pair(p, id, other, q)) {
        push_todo(j->mult, j->carrier, false);
        ++stats_.jpairs_generated;
      }
      if (bundle_.uses(Criterion::GSyzygy))
        if (auto k = ctx_.koszul_signature(p, other))
          gsyz_.insert(*k);
    }
    if (bundle_.uses(Criterion::ESyzygy))
      esyzygy_populate(esyz_, ctx_, p);
    done_.push_back(id);
    ++stats_.stored;
  }

  /// Replaces every F5-minimal TODO entry that passes the criteria by [1, mp]
  /// and prepends mp to Rules, one entry at a time.
  void rules_pre_selection_update() {
    if (todo_.empty())
      return;
    auto key = [](const TodoEntry &e) { return std::make_pair(e.sig.index, e.lm.degree()); };
    auto best = key(*todo_.begin());
    for (const auto &e : todo_) {
      auto k = key(e);
      if (f5_compare(k.first, k.second, best.first, best.second) < 0)
        best = k;
    }
    std::vector<TodoEntry> minimal;
    for (const auto &e : todo_)
      if (key(e) == best && !e.in_rules)
        minimal.push_back(e);
    for (const auto &e : minimal) {
      if (blocking_criterion(e))
        continue;
      erase_todo(todo_.find(e));
      PairId id = push_store(ctx_.multiply(e.mult, store_[e.carrier]));
      rules_.prepend(id);
      push_todo(ring_.one_monomial(), id, e.initial, true, e.seq);
    }
  }

  void record(TraceEvent ev) {
    if (options_.record_trace)
      trace_.push_back(std::move(ev));
  }

  PolyRing<K> ring_;
  std::vector<Poly> f_;
  SignatureOrder sord_;
  StrategyBundle bundle_;
  EngineOptions options_;
  SigContext<K> ctx_;

  std::deque<Pair<K>> store_;
  std::vector<PairId> done_;
  std::set<TodoEntry, TodoLess> todo_;
  std::map<TodoKey, std::size_t> todo_keys_;
  std::uint64_t next_seq_ = 0;
  RulesList rules_;
  SyzygySet esyz_;
  SyzygySet gsyz_;
  std::set<ModuleMonomial, ModuleMonomialLess> passed_;
  Stats stats_;
  std::vector<TraceEvent> trace_;
  std::optional<ModuleMonomial> last_selected_;
};

template <class K>
EngineResult<K> run_trb(const StrategyBundle &bundle, const PolyRing<K> &ring,
                        const std::vector<Polynomial<K>> &f, const SignatureOrder &sord,
                        const EngineOptions &options = {}) {
  auto engine = std::make_unique<Engine<K>>(ring, f, sord, bundle, options);
  return engine->run();
}

} // namespace trb
