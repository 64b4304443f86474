#include "rainbow/experiment.hpp"

#include <algorithm>
#include <stdexcept>

#include "rainbow/generators.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/theorems.hpp"
#include "rainbow/trace.hpp"

namespace rainbow {

namespace {

std::string u64s(std::uint64_t v) { return std::to_string(v); }
std::string ints(long long v) { return std::to_string(v); }
const char* bool01(bool b) { return b ? "1" : "0"; }

// Graph text with newlines folded to ';' so it fits a single report line.
std::string inline_graph(const EdgeColoredGraph& g) {
  std::string text = write_graph_string(g);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

std::string color_list(const ColorSet& s) {
  std::string out;
  for (ColorId c : s.to_vector()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

class SingleGraphStream : public GraphStream {
 public:
  SingleGraphStream(EdgeColoredGraph g, std::string provenance)
      : g_(std::move(g)), provenance_(std::move(provenance)) {}

  std::optional<StreamItem> next() override {
    if (done_) return std::nullopt;
    done_ = true;
    return StreamItem{g_, 0, provenance_, {}};
  }

 private:
  EdgeColoredGraph g_;
  std::string provenance_;
  bool done_ = false;
};

std::unique_ptr<GraphStream> make_stream(const ExperimentConfig& cfg) {
  if (!cfg.input_path.empty() && !cfg.gen.empty())
    throw std::invalid_argument("give either an input file or a gen spec");
  if (!cfg.input_path.empty())
    return std::make_unique<SingleGraphStream>(read_graph_file(cfg.input_path),
                                               "file:" + cfg.input_path);
  if (!cfg.gen.empty()) {
    GenSpec spec = GenSpec::parse(cfg.gen);
    if (cfg.seed) spec.seed = *cfg.seed;
    return generate(spec);
  }
  throw std::invalid_argument("command needs an input file or a gen spec");
}

void basic_fields(KvList& item, const StreamItem& si) {
  const EdgeColoredGraph& g = si.graph;
  kv_add(item, "provenance", si.provenance);
  kv_add(item, "n", ints(g.vertex_count()));
  kv_add(item, "m", ints(g.edge_count()));
  kv_add(item, "colors", ints(g.distinct_color_count()));
  kv_add(item, "delta-c",
         ints(g.vertex_count() >= 1 ? g.min_color_degree() : 0));
}

int require_k(const ExperimentConfig& cfg, int floor_value) {
  if (!cfg.k) throw std::invalid_argument(cfg.command + " requires k");
  if (*cfg.k < floor_value)
    throw std::invalid_argument(cfg.command + " requires k >= " +
                                std::to_string(floor_value));
  return *cfg.k;
}

// ---- solve ----------------------------------------------------------------

int cmd_solve(const ExperimentConfig& cfg, Report& rep) {
  auto stream = make_stream(cfg);
  std::uint64_t items = 0, complete = 0;
  int exit_code = 0;
  while (auto si = stream->next()) {
    KvList& item = rep.new_item();
    basic_fields(item, *si);
    const EdgeColoredGraph& g = si->graph;
    SearchResult pr = longest_rainbow_path(g, cfg.budget, cfg.threads);
    kv_add(item, "longest-path", ints(pr.best_length));
    if (pr.best_path) kv_add(item, "path-witness", to_string(*pr.best_path));
    kv_add(item, "path-complete", bool01(pr.complete));
    SearchResult cr;
    cr.complete = true;  // graphs below three vertices have no cycles
    if (g.vertex_count() >= 3)
      cr = longest_rainbow_cycle(g, cfg.budget, cfg.threads);
    kv_add(item, "longest-cycle", ints(cr.best_length));
    if (cr.best_cycle) kv_add(item, "cycle-witness", to_string(*cr.best_cycle));
    kv_add(item, "cycle-complete", bool01(cr.complete));
    kv_add(item, "nodes", u64s(pr.nodes_expanded + cr.nodes_expanded));
    ++items;
    if (pr.complete && cr.complete)
      ++complete;
    else
      exit_code = 2;
  }
  rep.add_summary("items", u64s(items));
  rep.add_summary("complete", u64s(complete));
  return exit_code;
}

// ---- check-lemmas ---------------------------------------------------------

std::vector<std::pair<int, int>> lemma_splits(const ExperimentConfig& cfg,
                                              int k) {
  if (cfg.s || cfg.t) {
    if (!cfg.s || !cfg.t)
      throw std::invalid_argument("give both s and t or neither");
    if (*cfg.s < 1 || *cfg.t < 1 || *cfg.s + *cfg.t != k)
      throw std::invalid_argument("need s,t >= 1 with s+t=k");
    return {{*cfg.s, *cfg.t}};
  }
  std::vector<std::pair<int, int>> all;
  for (int s = 1; s < k; ++s) all.emplace_back(s, k - s);
  return all;
}

int cmd_check_lemmas(const ExperimentConfig& cfg, Report& rep) {
  const int k = require_k(cfg, 3);
  const auto splits = lemma_splits(cfg, k);
  auto stream = make_stream(cfg);
  std::uint64_t items = 0, checked = 0, cycle_found = 0, violations = 0,
                exhausted = 0;
  while (auto si = stream->next()) {
    ++items;
    KvList& item = rep.new_item();
    basic_fields(item, *si);
    kv_add(item, "k", ints(k));
    const EdgeColoredGraph& g = si->graph;
    auto pc = certify_longest_rainbow_path(g, cfg.budget, cfg.threads);
    if (!pc) {
      kv_add(item, "status", "path-budget-exhausted");
      ++exhausted;
      continue;
    }
    NoCycleOutcome nc =
        certify_no_rainbow_cycle_at_least(g, k, cfg.budget, cfg.threads);
    kv_add(item, "nodes", u64s(pc->nodes_expanded() + nc.nodes_expanded));
    if (nc.kind == NoCycleOutcome::Kind::cycle_found) {
      kv_add(item, "status", "cycle-found");
      kv_add(item, "cycle-witness", to_string(*nc.witness));
      ++cycle_found;
      continue;
    }
    if (nc.kind == NoCycleOutcome::Kind::unknown) {
      kv_add(item, "status", "cycle-search-budget-exhausted");
      ++exhausted;
      continue;
    }
    kv_add(item, "status", "checked");
    kv_add(item, "p", ints(pc->path().vertices.size()));
    ++checked;
    bool bad = false;
    LemmaCheck l1 = check_lemma1(*pc, *nc.certificate);
    kv_add(item, "lemma1", to_string(l1.status));
    if (!l1.detail.empty()) kv_add(item, "lemma1-detail", l1.detail);
    bad = bad || l1.status == ClaimStatus::fails;
    for (const auto& [s, t] : splits) {
      LemmaCheck l2 = check_lemma2(*pc, *nc.certificate, s, t);
      const std::string key =
          "lemma2-s" + std::to_string(s) + "t" + std::to_string(t);
      kv_add(item, key, to_string(l2.status));
      if (!l2.detail.empty()) kv_add(item, key + "-detail", l2.detail);
      bad = bad || l2.status == ClaimStatus::fails;
    }
    if (bad) ++violations;
  }
  rep.add_summary("items", u64s(items));
  rep.add_summary("checked", u64s(checked));
  rep.add_summary("cycle-found", u64s(cycle_found));
  rep.add_summary("violations", u64s(violations));
  rep.add_summary("budget-exhausted", u64s(exhausted));
  if (violations) return 3;
  return exhausted ? 2 : 0;
}

// ---- eval-theorem ---------------------------------------------------------

void theorem_item_fields(KvList& item, const TheoremReport& tr) {
  kv_add(item, "theorem", to_string(tr.id));
  if (tr.k) kv_add(item, "k", ints(*tr.k));
  for (const HypothesisCheck& h : tr.hypotheses) {
    kv_add(item, "hyp." + h.name, to_string(h.status));
    if (!h.detail.empty()) kv_add(item, "hyp." + h.name + "-detail", h.detail);
  }
  for (const HypothesisCheck& h : tr.notes) {
    kv_add(item, "note." + h.name, to_string(h.status));
    if (!h.detail.empty())
      kv_add(item, "note." + h.name + "-detail", h.detail);
  }
  kv_add(item, "hypotheses-hold", to_string(tr.hypotheses_hold));
  kv_add(item, "bound", tr.bound.str());
  kv_add(item, "target", ints(tr.target_length));
  kv_add(item, "conclusion", to_string(tr.conclusion));
  if (tr.path_witness) kv_add(item, "path-witness", to_string(*tr.path_witness));
  if (tr.cycle_witness)
    kv_add(item, "cycle-witness", to_string(*tr.cycle_witness));
  kv_add(item, "falsified", bool01(tr.falsified()));
  kv_add(item, "nodes", u64s(tr.nodes_expanded));
}

int cmd_eval_theorem(const ExperimentConfig& cfg, Report& rep) {
  auto id = parse_theorem_id(cfg.theorem);
  if (!id) throw std::invalid_argument("unknown theorem '" + cfg.theorem + "'");
  if (*id == TheoremId::Conjecture)
    throw std::invalid_argument("the conjecture is explored with hunt");
  auto stream = make_stream(cfg);
  std::uint64_t items = 0, hyp_ok = 0, verified = 0, unknown = 0,
                falsified = 0;
  while (auto si = stream->next()) {
    ++items;
    KvList& item = rep.new_item();
    basic_fields(item, *si);
    TheoremReport tr =
        evaluate_theorem(*id, si->graph, cfg.k, cfg.budget, cfg.threads);
    theorem_item_fields(item, tr);
    if (tr.hypotheses_hold == TriState::yes) ++hyp_ok;
    if (tr.conclusion == TriState::yes) ++verified;
    if (tr.conclusion == TriState::unknown ||
        tr.hypotheses_hold == TriState::unknown)
      ++unknown;
    if (tr.falsified()) ++falsified;
  }
  rep.add_summary("items", u64s(items));
  rep.add_summary("hypotheses-satisfied", u64s(hyp_ok));
  rep.add_summary("verified", u64s(verified));
  rep.add_summary("unknown", u64s(unknown));
  rep.add_summary("falsified", u64s(falsified));
  if (falsified) return 3;
  return unknown ? 2 : 0;
}

// ---- trace ----------------------------------------------------------------

void trace_item_fields(KvList& item, const ProofTrace& tr,
                       const TraceVerification& ver) {
  kv_add(item, "p", ints(tr.p));
  kv_add(item, "s", ints(tr.s));
  kv_add(item, "t", ints(tr.t));
  kv_add(item, "path", to_string(tr.path));
  kv_add(item, "set-a", color_list(tr.A));
  kv_add(item, "set-b", color_list(tr.B));
  kv_add(item, "set-c0", color_list(tr.C0));
  kv_add(item, "set-c1", color_list(tr.C1));
  kv_add(item, "set-c2", color_list(tr.C2));
  kv_add(item, "eps1", ints(tr.eps1));
  kv_add(item, "eps2", ints(tr.eps2));
  kv_add(item, "eps1p", ints(tr.eps1p));
  kv_add(item, "eps2p", ints(tr.eps2p));
  kv_add(item, "ends-adjacent", bool01(tr.ends_adjacent));
  if (tr.ends_adjacent) kv_add(item, "closing-color", ints(tr.closing_color));
  kv_add(item, "l", ints(tr.l));
  kv_add(item, "lp", ints(tr.lp));
  std::string reps;
  for (const auto& [c, v] : tr.start_reps) {
    if (!reps.empty()) reps += ',';
    reps += std::to_string(c) + ":" + std::to_string(v);
  }
  kv_add(item, "start-reps", reps);
  reps.clear();
  for (const auto& [c, v] : tr.end_reps) {
    if (!reps.empty()) reps += ',';
    reps += std::to_string(c) + ":" + std::to_string(v);
  }
  kv_add(item, "end-reps", reps);
  for (const InequalityCheck& c : ver.checks) {
    kv_add(item, "check." + c.name, c.holds ? "holds" : "fails");
    kv_add(item, "check." + c.name + "-lhs", ints(c.lhs));
    kv_add(item, "check." + c.name + "-rel", c.relation);
    kv_add(item, "check." + c.name + "-rhs", ints(c.rhs));
  }
  kv_add(item, "all-hold", bool01(ver.all_hold));
}

int cmd_trace(const ExperimentConfig& cfg, Report& rep) {
  const int k = require_k(cfg, 3);
  auto stream = make_stream(cfg);
  std::uint64_t items = 0, traced = 0, c4_present = 0, cycle_found = 0,
                short_path = 0, violations = 0, exhausted = 0;
  while (auto si = stream->next()) {
    ++items;
    KvList& item = rep.new_item();
    basic_fields(item, *si);
    kv_add(item, "k", ints(k));
    const EdgeColoredGraph& g = si->graph;
    auto c4 = certify_rainbow_c4_free(g);
    if (!c4) {
      kv_add(item, "status", "rainbow-c4-present");
      ++c4_present;
      continue;
    }
    NoCycleOutcome nc =
        certify_no_rainbow_cycle_at_least(g, k, cfg.budget, cfg.threads);
    if (nc.kind == NoCycleOutcome::Kind::cycle_found) {
      kv_add(item, "status", "cycle-found");
      kv_add(item, "cycle-witness", to_string(*nc.witness));
      ++cycle_found;
      continue;
    }
    if (nc.kind == NoCycleOutcome::Kind::unknown) {
      kv_add(item, "status", "cycle-search-budget-exhausted");
      ++exhausted;
      continue;
    }
    auto pc = certify_longest_rainbow_path(g, cfg.budget, cfg.threads);
    if (!pc) {
      kv_add(item, "status", "path-budget-exhausted");
      ++exhausted;
      continue;
    }
    kv_add(item, "nodes", u64s(pc->nodes_expanded() + nc.nodes_expanded));
    const int p = static_cast<int>(pc->path().vertices.size());
    if (p < 2 * k) {
      kv_add(item, "status", "trace-undefined");
      kv_add(item, "p", ints(p));
      ++short_path;
      continue;
    }
    ProofTrace tr = compute_proof_trace(*pc, *nc.certificate);
    TraceVerification ver =
        verify_trace_inequalities(tr, *pc, *nc.certificate, *c4);
    kv_add(item, "status", "traced");
    trace_item_fields(item, tr, ver);
    ++traced;
    if (!ver.all_hold) ++violations;
  }
  rep.add_summary("items", u64s(items));
  rep.add_summary("traced", u64s(traced));
  rep.add_summary("rainbow-c4-present", u64s(c4_present));
  rep.add_summary("cycle-found", u64s(cycle_found));
  rep.add_summary("short-path", u64s(short_path));
  rep.add_summary("violations", u64s(violations));
  rep.add_summary("budget-exhausted", u64s(exhausted));
  if (violations) return 3;
  return exhausted ? 2 : 0;
}

// ---- hunt -----------------------------------------------------------------

int cmd_hunt(const ExperimentConfig& cfg, Report& rep) {
  const int k = require_k(cfg, 4);
  auto stream = make_stream(cfg);
  HuntOutcome ho = hunt_conjecture(*stream, k, cfg.budget, cfg.threads);
  for (const HuntCandidate& cand : ho.candidates) {
    KvList& item = rep.new_item();
    kv_add(item, "provenance", cand.provenance);
    kv_add(item, "n", ints(cand.report.n));
    kv_add(item, "m", ints(cand.report.m));
    kv_add(item, "colors", ints(cand.report.colors));
    kv_add(item, "delta-c", ints(cand.report.delta_c));
    kv_add(item, "k", ints(k));
    kv_add(item, "graph", inline_graph(cand.graph));
    kv_add(item, "nodes", u64s(cand.report.nodes_expanded));
  }
  rep.add_summary("scanned", u64s(ho.scanned));
  rep.add_summary("eligible", u64s(ho.eligible));
  rep.add_summary("verified", u64s(ho.verified));
  rep.add_summary("unknown", u64s(ho.unknown));
  rep.add_summary("candidates", u64s(ho.candidates.size()));
  return ho.unknown ? 2 : 0;
}

// ---- compare --------------------------------------------------------------

int cmd_compare(const ExperimentConfig& cfg, Report& rep) {
  if (!cfg.n || !cfg.delta_c || !cfg.k)
    throw std::invalid_argument("compare requires n, delta-c and k");
  GuaranteeComparison c = compare_guarantees(*cfg.n, *cfg.delta_c, *cfg.k);
  KvList& item = rep.new_item();
  kv_add(item, "n", ints(c.n));
  kv_add(item, "delta-c", ints(c.delta_c));
  kv_add(item, "k", ints(c.k));
  kv_add(item, "liwang-threshold", c.liwang_threshold.str());
  kv_add(item, "liwang-applicable", bool01(c.liwang_applicable));
  kv_add(item, "liwang-bound", c.liwang_bound.str());
  kv_add(item, "k-below-liwang-range", bool01(c.k_below_liwang_range));
  kv_add(item, "main-max-k", ints(c.main_max_k));
  kv_add(item, "main-applicable", bool01(c.main_applicable));
  kv_add(item, "difference", c.difference.str());
  kv_add(item, "at-threshold", bool01(c.at_threshold));
  if (c.at_threshold) {
    kv_add(item, "parity", c.parity);
    kv_add(item, "at-threshold-liwang-bound",
           c.at_threshold_liwang_bound.str());
    kv_add(item, "at-threshold-gap", c.at_threshold_gap.str());
  }
  return 0;
}

// ---- sweep ----------------------------------------------------------------

struct SweepCounters {
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  std::uint64_t exhausted = 0;
  std::uint64_t nodes = 0;
};

void violation_item(Report& rep, const StreamItem& si,
                    const std::string& what, const std::string& detail) {
  KvList& item = rep.new_item();
  basic_fields(item, si);
  kv_add(item, "violation", what);
  if (!detail.empty()) kv_add(item, "detail", detail);
  kv_add(item, "graph", inline_graph(si.graph));
}

int sweep_check_lemmas(const ExperimentConfig& cfg, GraphStream& stream,
                       Report& rep) {
  const int fixed_k = cfg.k.value_or(0);
  if (fixed_k != 0 && fixed_k < 3)
    throw std::invalid_argument("sweep check-lemmas needs k = 0 or k >= 3");
  SweepCounters ct;
  std::uint64_t lemma1_checks = 0, lemma2_checks = 0, instances = 0;
  while (auto si = stream.next()) {
    ++ct.graphs;
    const EdgeColoredGraph& g = si->graph;
    auto pc = certify_longest_rainbow_path(g, cfg.budget, cfg.threads);
    if (!pc) {
      ++ct.exhausted;
      continue;
    }
    ct.nodes += pc->nodes_expanded();
    const int p = static_cast<int>(pc->path().vertices.size());
    SearchResult cyc;
    cyc.complete = true;
    if (g.vertex_count() >= 3) {
      cyc = longest_rainbow_cycle(g, cfg.budget, cfg.threads);
      ct.nodes += cyc.nodes_expanded;
      if (!cyc.complete) {
        ++ct.exhausted;
        continue;
      }
    }
    int k_lo, k_hi;
    if (fixed_k) {
      k_lo = k_hi = fixed_k;
      if (fixed_k <= cyc.best_length || fixed_k > p) continue;
    } else {
      k_lo = std::max(3, cyc.best_length + 1);
      k_hi = p;
    }
    for (int k = k_lo; k <= k_hi; ++k) {
      auto cert = certificate_from_complete_cycle_search(g, cyc, k);
      if (!cert) continue;  // only k <= best_length, filtered above
      ++instances;
      LemmaCheck l1 = check_lemma1(*pc, *cert);
      ++lemma1_checks;
      if (l1.status == ClaimStatus::fails) {
        ++ct.violations;
        violation_item(rep, *si, "lemma1-k" + std::to_string(k), l1.detail);
      }
      for (int s = 1; s < k; ++s) {
        LemmaCheck l2 = check_lemma2(*pc, *cert, s, k - s);
        ++lemma2_checks;
        if (l2.status == ClaimStatus::fails) {
          ++ct.violations;
          violation_item(rep, *si,
                         "lemma2-k" + std::to_string(k) + "-s" +
                             std::to_string(s) + "t" + std::to_string(k - s),
                         l2.detail);
        }
      }
    }
  }
  rep.add_summary("graphs", u64s(ct.graphs));
  rep.add_summary("instances", u64s(instances));
  rep.add_summary("lemma1-checks", u64s(lemma1_checks));
  rep.add_summary("lemma2-checks", u64s(lemma2_checks));
  rep.add_summary("violations", u64s(ct.violations));
  rep.add_summary("budget-exhausted", u64s(ct.exhausted));
  rep.add_summary("nodes", u64s(ct.nodes));
  if (ct.violations) return 3;
  return ct.exhausted ? 2 : 0;
}

int sweep_cada2(const ExperimentConfig& cfg, GraphStream& stream,
                Report& rep) {
  SweepCounters ct;
  std::uint64_t eligible = 0, verified = 0;
  while (auto si = stream.next()) {
    ++ct.graphs;
    const EdgeColoredGraph& g = si->graph;
    const int n = g.vertex_count();
    if (n < 1) continue;
    // Strict threshold: delta_c > n/2 + 2.
    if (2 * g.min_color_degree() <= n + 4) continue;
    ++eligible;
    DecisionResult dr = has_rainbow_cycle_at_least(g, 4, cfg.budget,
                                                   cfg.threads);
    ct.nodes += dr.nodes_expanded;
    if (dr.verdict == TriState::yes) {
      ++verified;
    } else if (dr.verdict == TriState::no) {
      ++ct.violations;
      violation_item(rep, *si, "cada2", "no rainbow cycle of length >= 4");
    } else {
      ++ct.exhausted;
    }
  }
  rep.add_summary("graphs", u64s(ct.graphs));
  rep.add_summary("eligible", u64s(eligible));
  rep.add_summary("verified", u64s(verified));
  rep.add_summary("violations", u64s(ct.violations));
  rep.add_summary("budget-exhausted", u64s(ct.exhausted));
  rep.add_summary("nodes", u64s(ct.nodes));
  if (ct.violations) return 3;
  return ct.exhausted ? 2 : 0;
}

int sweep_path_bounds(const ExperimentConfig& cfg, GraphStream& stream,
                      Report& rep) {
  SweepCounters ct;
  std::uint64_t chenli_eligible = 0, chenli_verified = 0, das_eligible = 0,
                das_verified = 0;
  while (auto si = stream.next()) {
    ++ct.graphs;
    const EdgeColoredGraph& g = si->graph;
    if (g.vertex_count() < 1) continue;
    const int dc = g.min_color_degree();
    if (dc >= 7) {
      ++chenli_eligible;
      const int target =
          static_cast<int>(Rational(2 * dc + 3, 3).ceil());
      DecisionResult dr =
          has_rainbow_path_at_least(g, target, cfg.budget, cfg.threads);
      ct.nodes += dr.nodes_expanded;
      if (dr.verdict == TriState::yes)
        ++chenli_verified;
      else if (dr.verdict == TriState::no) {
        ++ct.violations;
        violation_item(rep, *si, "chenli",
                       "no rainbow path with >= " + std::to_string(target) +
                           " edges");
      } else {
        ++ct.exhausted;
      }
    }
    if (dc >= 8) {
      ++das_eligible;
      const int target = static_cast<int>(Rational(3 * dc, 5).ceil());
      DecisionResult dr =
          has_rainbow_path_at_least(g, target, cfg.budget, cfg.threads);
      ct.nodes += dr.nodes_expanded;
      if (dr.verdict == TriState::yes)
        ++das_verified;
      else if (dr.verdict == TriState::no) {
        ++ct.violations;
        violation_item(rep, *si, "das",
                       "no rainbow path with >= " + std::to_string(target) +
                           " edges");
      } else {
        ++ct.exhausted;
      }
    }
  }
  rep.add_summary("graphs", u64s(ct.graphs));
  rep.add_summary("chenli-eligible", u64s(chenli_eligible));
  rep.add_summary("chenli-verified", u64s(chenli_verified));
  rep.add_summary("das-eligible", u64s(das_eligible));
  rep.add_summary("das-verified", u64s(das_verified));
  rep.add_summary("violations", u64s(ct.violations));
  rep.add_summary("budget-exhausted", u64s(ct.exhausted));
  rep.add_summary("nodes", u64s(ct.nodes));
  if (ct.violations) return 3;
  return ct.exhausted ? 2 : 0;
}

int sweep_trace(const ExperimentConfig& cfg, GraphStream& stream,
                Report& rep) {
  const int k = require_k(cfg, 3);
  SweepCounters ct;
  std::uint64_t traced = 0, c4_present = 0, cycle_found = 0, short_path = 0,
                delta_hyp = 0;
  while (auto si = stream.next()) {
    ++ct.graphs;
    const EdgeColoredGraph& g = si->graph;
    const int n = g.vertex_count();
    if (n >= 1 && Rational(g.min_color_degree()) >= Rational(n + 3 * k - 2, 2))
      ++delta_hyp;
    auto c4 = certify_rainbow_c4_free(g);
    if (!c4) {
      ++c4_present;
      continue;
    }
    NoCycleOutcome nc =
        certify_no_rainbow_cycle_at_least(g, k, cfg.budget, cfg.threads);
    ct.nodes += nc.nodes_expanded;
    if (nc.kind == NoCycleOutcome::Kind::cycle_found) {
      ++cycle_found;
      continue;
    }
    if (nc.kind == NoCycleOutcome::Kind::unknown) {
      ++ct.exhausted;
      continue;
    }
    auto pc = certify_longest_rainbow_path(g, cfg.budget, cfg.threads);
    if (!pc) {
      ++ct.exhausted;
      continue;
    }
    ct.nodes += pc->nodes_expanded();
    if (static_cast<int>(pc->path().vertices.size()) < 2 * k) {
      ++short_path;
      continue;
    }
    ProofTrace tr = compute_proof_trace(*pc, *nc.certificate);
    TraceVerification ver =
        verify_trace_inequalities(tr, *pc, *nc.certificate, *c4);
    ++traced;
    if (!ver.all_hold) {
      ++ct.violations;
      std::string bad;
      for (const InequalityCheck& c : ver.checks)
        if (!c.holds) {
          if (!bad.empty()) bad += ',';
          bad += c.name;
        }
      violation_item(rep, *si, "trace-k" + std::to_string(k), bad);
    }
  }
  rep.add_summary("graphs", u64s(ct.graphs));
  rep.add_summary("delta-hypothesis-satisfied", u64s(delta_hyp));
  rep.add_summary("rainbow-c4-present", u64s(c4_present));
  rep.add_summary("cycle-found", u64s(cycle_found));
  rep.add_summary("short-path", u64s(short_path));
  rep.add_summary("traced", u64s(traced));
  rep.add_summary("violations", u64s(ct.violations));
  rep.add_summary("budget-exhausted", u64s(ct.exhausted));
  rep.add_summary("nodes", u64s(ct.nodes));
  if (ct.violations) return 3;
  return ct.exhausted ? 2 : 0;
}

int cmd_sweep(const ExperimentConfig& cfg, Report& rep) {
  if (!cfg.n) throw std::invalid_argument("sweep requires n");
  if (*cfg.n < 1 || *cfg.n > 7)
    throw std::invalid_argument("sweep supports 1 <= n <= 7");
  GenSpec spec;
  spec.family = Family::exhaustive_enum;
  spec.n = *cfg.n;
  spec.samples = 2;
  spec.seed = cfg.seed.value_or(0);
  auto stream = generate(spec);
  if (cfg.sweep_action == "check-lemmas")
    return sweep_check_lemmas(cfg, *stream, rep);
  if (cfg.sweep_action == "cada2") return sweep_cada2(cfg, *stream, rep);
  if (cfg.sweep_action == "path-bounds")
    return sweep_path_bounds(cfg, *stream, rep);
  if (cfg.sweep_action == "trace") return sweep_trace(cfg, *stream, rep);
  throw std::invalid_argument("unknown sweep action '" + cfg.sweep_action +
                              "'");
}

}  // namespace

KvList ExperimentConfig::to_config_lines() const {
  KvList out;
  kv_add(out, "command", command);
  if (!input_path.empty()) kv_add(out, "input", input_path);
  if (!gen.empty()) kv_add(out, "gen", gen);
  if (!theorem.empty()) kv_add(out, "theorem", theorem);
  if (!sweep_action.empty()) kv_add(out, "sweep-action", sweep_action);
  if (k) kv_add(out, "k", ints(*k));
  if (s) kv_add(out, "s", ints(*s));
  if (t) kv_add(out, "t", ints(*t));
  if (n) kv_add(out, "n", ints(*n));
  if (delta_c) kv_add(out, "delta-c", ints(*delta_c));
  if (budget.max_nodes) kv_add(out, "budget-nodes", u64s(*budget.max_nodes));
  if (budget.max_millis)
    kv_add(out, "budget-millis", ints(*budget.max_millis));
  if (seed) kv_add(out, "seed", u64s(*seed));
  return out;
}

ExperimentConfig ExperimentConfig::from_config_lines(const KvList& lines) {
  ExperimentConfig cfg;
  for (const auto& [key, value] : lines) {
    try {
      if (key == "command") {
        cfg.command = value;
      } else if (key == "input") {
        cfg.input_path = value;
      } else if (key == "gen") {
        cfg.gen = value;
      } else if (key == "theorem") {
        cfg.theorem = value;
      } else if (key == "sweep-action") {
        cfg.sweep_action = value;
      } else if (key == "k") {
        cfg.k = std::stoi(value);
      } else if (key == "s") {
        cfg.s = std::stoi(value);
      } else if (key == "t") {
        cfg.t = std::stoi(value);
      } else if (key == "n") {
        cfg.n = std::stoi(value);
      } else if (key == "delta-c") {
        cfg.delta_c = std::stoi(value);
      } else if (key == "budget-nodes") {
        cfg.budget.max_nodes = std::stoull(value);
      } else if (key == "budget-millis") {
        cfg.budget.max_millis = std::stoll(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad config value for '" + key + "'");
    }
  }
  if (cfg.command.empty())
    throw std::invalid_argument("config needs a command");
  return cfg;
}

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
  ExperimentOutcome out;
  out.report.config = cfg.to_config_lines();
  int code = 0;
  if (cfg.command == "solve")
    code = cmd_solve(cfg, out.report);
  else if (cfg.command == "check-lemmas")
    code = cmd_check_lemmas(cfg, out.report);
  else if (cfg.command == "eval-theorem")
    code = cmd_eval_theorem(cfg, out.report);
  else if (cfg.command == "trace")
    code = cmd_trace(cfg, out.report);
  else if (cfg.command == "hunt")
    code = cmd_hunt(cfg, out.report);
  else if (cfg.command == "compare")
    code = cmd_compare(cfg, out.report);
  else if (cfg.command == "sweep")
    code = cmd_sweep(cfg, out.report);
  else
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
  out.report.add_summary("exit-code", ints(code));
  out.exit_code = code;
  if (!cfg.output_path.empty()) out.report.save(cfg.output_path);
  return out;
}

}  // namespace rainbow
