// Command line front end: run, predict, compare.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trb/corpus.hpp"
#include "trb/engine.hpp"
#include "trb/io.hpp"
#include "trb/verify.hpp"

using namespace trb;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitStepCap = 2;

const char *kDefaultPredictIdeal = "ring: QQ[x1,x2,x3,x4]\n"
                                   "order: grevlex\n"
                                   "polys:\n"
                                   "x1*x4\n"
                                   "x1*x2 - x2^2\n"
                                   "x1*x3 - x3^2\n";

struct Options {
  std::string algorithm = "gvw";
  std::string input;
  std::string order;
  std::string sig_order = "pot";
  std::uint64_t max_steps = 1000000;
  bool homogenize = false;
  bool track_module = false;
  bool verify = false;
  bool regular_reductions = false;
  std::string stats_path;
  std::uint64_t seed = 0;
  std::size_t random = 0;
};

IdealSpec load_spec(const Options &o) {
  auto spec = parse_ideal(read_file(o.input));
  if (!o.order.empty())
    spec.order = o.order;
  return spec;
}

template <class K>
SignatureOrder build_signature_order(const std::string &name, const Instance<K> &in) {
  const std::string prefix = "matrix:";
  if (name.rfind(prefix, 0) == 0) {
    auto m = parse_matrix_spec(read_file(name.substr(prefix.size())), in.ring.nvars(), in.f.size());
    return make_signature_order(SignatureOrderKind::CustomMatrix, in.ring, in.f, &m);
  }
  return make_signature_order(parse_signature_order_kind(name), in.ring, in.f);
}

template <class K> std::string poly_string(const PolyRing<K> &ring, const Polynomial<K> &p) {
  return p.is_zero() ? "0" : ring.to_string(ring.monic(p));
}

json stats_json(const Stats &s) {
  json j;
  j["selections"] = s.selections;
  for (auto c : kAllCriteria)
    j["blocked_" + criterion_name(c)] = s.blocked_count(c);
  j["blocked_total"] = s.blocked_total();
  j["reductions"] = s.reductions_performed;
  j["reduction_steps"] = s.reduction_steps;
  j["stored"] = s.stored;
  j["rejected"] = s.rejected;
  j["syzygies_found"] = s.syzygies_found;
  j["jpairs_generated"] = s.jpairs_generated;
  j["steps_used"] = s.steps_used;
  j["terminated"] = s.terminated;
  return j;
}

template <class K> json blocked_at_json(const PolyRing<K> &ring, const Stats &s, Criterion c) {
  json arr = json::array();
  for (const auto &[crit, sig] : s.blocked_at)
    if (crit == c)
      arr.push_back(sig_to_string(sig, ring.names()));
  return arr;
}

void check_regular_flag(const Options &o, const StrategyBundle &b) {
  if (o.regular_reductions && b.reducer != Reducer::Top)
    throw Error("--regular-reductions applies to gvw and mj only; " + b.name +
                " uses F5 reductions");
}

template <class K> int cmd_run_typed(const Options &o, Instance<K> in) {
  json report;
  if (o.homogenize) {
    in = homogenized(in);
    report["homogenized_variable"] = in.ring.names().back();
  }
  auto bundle = StrategyBundle::by_name(o.algorithm);
  check_regular_flag(o, bundle);
  auto sord = build_signature_order(o.sig_order, in);
  EngineOptions opts;
  opts.max_steps = o.max_steps;
  opts.track_module = o.track_module;
  opts.regular_reductions = o.regular_reductions;
  Engine<K> engine(in.ring, in.f, sord, bundle, opts);
  auto res = engine.run();

  json basis = json::array();
  for (const auto &g : res.basis())
    basis.push_back(poly_string(in.ring, g));
  json done = json::array();
  for (const auto &p : res.done) {
    json e;
    e["signature"] = sig_to_string(p.sig, in.ring.names());
    e["lm"] = p.is_syzygy() ? "0" : in.ring.to_string(in.ring.leading_monomial(p.v));
    done.push_back(e);
  }
  report["algorithm"] = bundle.name;
  report["field"] = in.ring.field().name();
  report["variables"] = in.ring.names();
  report["order"] = in.ring.order().name();
  report["signature_order"] = sord.name();
  report["basis"] = basis;
  report["done"] = done;
  report["stats"] = stats_json(res.stats);
  report["termination"] = res.stats.terminated ? "terminated" : "step-cap";

  bool ok = true;
  if (o.track_module) {
    std::size_t bad = 0;
    for (const auto &p : engine.store())
      if (!engine.context().check_pair_invariant(p))
        ++bad;
    report["pair_invariant"] = {{"checked", engine.store().size()}, {"failures", bad}};
    ok = ok && bad == 0;
  }
  if (o.verify) {
    if (!res.stats.terminated) {
      report["verification"] = "skipped (step cap)";
    } else {
      auto oracle = buchberger(in.ring, in.f);
      auto g = res.basis();
      bool pass = leading_ideal_equal(in.ring, g, oracle) && is_groebner_basis(in.ring, g);
      report["verification"] = pass ? "pass" : "fail";
      ok = ok && pass;
    }
  }
  if (!o.stats_path.empty()) {
    json s = stats_json(res.stats);
    s["algorithm"] = bundle.name;
    s["signature_order"] = sord.name();
    s["mpair_blocked_at"] = blocked_at_json(in.ring, res.stats, Criterion::Mpair);
    json all = json::array();
    for (const auto &[c, sig] : res.stats.blocked_at)
      all.push_back(criterion_name(c) + ":" + sig_to_string(sig, in.ring.names()));
    s["blocked_at"] = all;
    std::ofstream out(o.stats_path);
    if (!out)
      throw Error("cannot write stats file " + o.stats_path);
    out << s.dump(2) << "\n";
  }
  std::cout << report.dump(2) << "\n";
  if (!ok)
    return kExitError;
  return res.stats.terminated ? kExitOk : kExitStepCap;
}

int cmd_run(const Options &o) {
  if (o.input.empty())
    throw Error("run needs --input PATH");
  auto spec = load_spec(o);
  if (spec.modulus == 0)
    return cmd_run_typed(o, make_instance(spec, RationalField()));
  return cmd_run_typed(o, make_instance(spec, PrimeField(spec.modulus)));
}

template <class K> int cmd_predict_typed(const Options &o, const Instance<K> &in) {
  auto sord = build_signature_order(o.sig_order, in);
  auto verdict = check_compatibility(in.ring.order(), sord);
  auto p = predict_termination(verdict);
  std::cout << to_string(p) << " (" << in.ring.order().name() << ", " << sord.name() << "): "
            << to_string(verdict.status);
  if (!verdict.detail.empty())
    std::cout << "; " << verdict.detail;
  std::cout << "\n";
  return kExitOk;
}

int cmd_predict(const Options &o) {
  IdealSpec spec = o.input.empty() ? parse_ideal(kDefaultPredictIdeal) : load_spec(o);
  if (!o.order.empty())
    spec.order = o.order;
  if (spec.modulus == 0)
    return cmd_predict_typed(o, make_instance(spec, RationalField()));
  return cmd_predict_typed(o, make_instance(spec, PrimeField(spec.modulus)));
}

struct CompareRow {
  std::string instance;
  std::string bundle;
  std::string status;
  Stats stats;
  std::size_t basis_size = 0;
  std::string agreement;
};

std::vector<std::string> compare_header() {
  std::vector<std::string> h{"instance", "bundle", "status", "selections"};
  for (auto c : kAllCriteria)
    h.push_back("blocked_" + criterion_name(c));
  for (const char *s : {"reductions", "stored", "basis_size", "oracle_agreement"})
    h.push_back(s);
  return h;
}

std::string csv_line(const std::vector<std::string> &cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    out += (i ? "," : "") + cells[i];
  return out;
}

template <class K>
std::vector<CompareRow> compare_instance(const Options &o, const std::string &name,
                                         Instance<K> in) {
  if (o.homogenize)
    in = homogenized(in);
  std::vector<CompareRow> rows;
  auto oracle = buchberger(in.ring, in.f);
  for (const auto &b : {StrategyBundle::f5(), StrategyBundle::ef5(), StrategyBundle::gvw(),
                        StrategyBundle::mj(), StrategyBundle::srewritten()}) {
    CompareRow row{name, b.name, "ok", {}, 0, "n/a"};
    try {
      auto sord = build_signature_order(o.sig_order, in);
      validate_bundle(b, in.ring, in.f, sord);
      EngineOptions opts;
      opts.max_steps = o.max_steps;
      opts.regular_reductions = o.regular_reductions && b.reducer == Reducer::Top;
      auto res = run_trb(b, in.ring, in.f, sord, opts);
      row.stats = res.stats;
      auto g = res.basis();
      row.basis_size = g.size();
      if (!res.stats.terminated) {
        row.status = "step-cap";
      } else {
        bool agree = leading_ideal_equal(in.ring, g, oracle) && is_groebner_basis(in.ring, g);
        row.agreement = agree ? "true" : "false";
      }
    } catch (const Error &) {
      row.status = "unsupported";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_compare(const Options &o) {
  std::vector<std::pair<std::string, IdealSpec>> corpus;
  if (!o.input.empty()) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(o.input))
      throw Error("compare --input must be a corpus directory: " + o.input);
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(o.input))
      if (e.is_regular_file() && e.path().extension() == ".ideal")
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto &f : files) {
      Options fo = o;
      fo.input = f.string();
      corpus.emplace_back(f.filename().string(), load_spec(fo));
    }
  }
  for (std::size_t k = 0; k < o.random; ++k) {
    auto spec = random_ideal(o.seed + k);
    if (!o.order.empty())
      spec.order = o.order;
    corpus.emplace_back("random-" + std::to_string(o.seed + k), std::move(spec));
  }

  std::cout << csv_line(compare_header()) << "\n";
  bool disagreement = false, capped = false;
  for (const auto &[name, spec] : corpus) {
    auto rows = spec.modulus == 0
                    ? compare_instance(o, name, make_instance(spec, RationalField()))
                    : compare_instance(o, name, make_instance(spec, PrimeField(spec.modulus)));
    for (const auto &r : rows) {
      std::vector<std::string> cells{r.instance, r.bundle, r.status,
                                     std::to_string(r.stats.selections)};
      for (auto c : kAllCriteria)
        cells.push_back(std::to_string(r.stats.blocked_count(c)));
      cells.push_back(std::to_string(r.stats.reductions_performed));
      cells.push_back(std::to_string(r.stats.stored));
      cells.push_back(std::to_string(r.basis_size));
      cells.push_back(r.agreement);
      std::cout << csv_line(cells) << "\n";
      disagreement = disagreement || r.agreement == "false";
      capped = capped || r.status == "step-cap";
    }
    if (disagreement) {
      std::cerr << "error: oracle disagreement on " << name << "\n";
      return kExitError;
    }
  }
  return capped ? kExitStepCap : kExitOk;
}

void add_common(CLI::App *cmd, Options &o) {
  cmd->add_option("--input", o.input, "Ideal file (compare: corpus directory)");
  cmd->add_option("--order", o.order, "Monomial order (overrides the file)")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  cmd->add_option("--sig-order", o.sig_order,
                  "pot, schreyer, schreyer-paper, degree, matrix:PATH or bad-degree-demo");
  cmd->add_option("--max-steps", o.max_steps, "Loop iteration cap")->check(CLI::PositiveNumber);
  cmd->add_flag("--homogenize", o.homogenize, "Homogenize the input with a new variable");
  cmd->add_option("--seed", o.seed, "Seed for random instances");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Signature-based Groebner basis engine"};
  app.require_subcommand(1);
  Options o;

  auto *run = app.add_subcommand("run", "Compute a basis with one strategy bundle");
  add_common(run, o);
  run->add_option("--algorithm", o.algorithm, "f5, ef5, gvw, mj or srewritten");
  run->add_flag("--track-module", o.track_module, "Track u and check u.f = v, lm(u) = sig");
  run->add_flag("--verify", o.verify, "Compare against the Buchberger oracle");
  run->add_flag("--regular-reductions", o.regular_reductions, "Use regular reductions (gvw, mj)");
  run->add_option("--stats", o.stats_path, "Write flat statistics JSON here");

  auto *predict = app.add_subcommand("predict", "Predict termination from the order pair");
  add_common(predict, o);

  auto *compare = app.add_subcommand("compare", "Run every bundle over a corpus, CSV output");
  add_common(compare, o);
  compare->add_option("--random", o.random, "Number of random instances");
  compare->add_flag("--regular-reductions", o.regular_reductions,
                    "Use regular reductions (gvw, mj)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (run->parsed())
      return cmd_run(o);
    if (predict->parsed())
      return cmd_predict(o);
    return cmd_compare(o);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
