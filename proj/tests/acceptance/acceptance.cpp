// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drunkcop/drunkcop.hpp"

namespace {

using namespace drunkcop;

int workers() { return default_worker_count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
};

SolverOptions tight() {
  SolverOptions o;
  o.tolerance = 1e-12;
  return o;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Smart-cop trials kept for the telemetry criterion.
struct RecordedRun {
  std::string label;
  Graph graph;
  GameConfig cfg;
  std::vector<TrialOutcome> outcomes;
};
std::vector<RecordedRun> g_smart_runs;

std::vector<TrialOutcome> smart_trials(const std::string& label, const Graph& g, GameConfig cfg,
                                       std::int64_t trials, std::uint64_t seed) {
  cfg.record_trajectory = true;
  auto outcomes = run_trials(g, PolicySpec::parse("smart"), cfg, trials, seed, workers());
  g_smart_runs.push_back({label, g, cfg, outcomes});
  return outcomes;
}

Verdict bipartite_example() {
  const Graph g = complete_bipartite(10, 10);
  const auto lex = PolicySpec::parse("greedy:lex");
  const double exact = exact_expected_capture(g, lex, tight()).at(0, 1);
  const SimulationReport mc = monte_carlo(g, lex, GameConfig{0, 1}, 100000, 101, workers());
  const bool ok = std::abs(exact - 10.0) <= 0.5 && std::abs(mc.mean - exact) <= 4 * mc.std_error;
  return {ok, "exact " + num(exact) + ", Monte Carlo " + num(mc.mean) + " +- " + num(mc.std_error)};
}

Verdict path_example() {
  const auto outcomes = smart_trials("path:100", path(100), GameConfig{0, 99}, 10000, 102);
  const SimulationReport r = summarize(outcomes, 102);
  return {r.mean >= 80.0 && r.mean <= 100.0 && r.truncated == 0,
          "mean " + num(r.mean) + " in [80, 100]"};
}

Verdict projective_planes() {
  Verdict v;
  for (int q : {2, 3}) {
    const Graph g = projective_incidence(q);
    const int verts = 2 * (q * q + q + 1);
    const double best = optimal_capture_values(g, tight()).max_value();
    const bool ok = g.diameter() == 3 && girth(g) == 6 && g.regularity() == q + 1 &&
                    g.order() == verts && best >= q + 1 - 1e-9;
    v.pass = v.pass && ok;
    v.detail += "q=" + std::to_string(q) + ": diam " + std::to_string(g.diameter()) + ", girth " +
                std::to_string(girth(g).value_or(-1)) + ", degree " +
                std::to_string(g.regularity().value_or(-1)) + ", n " + std::to_string(g.order()) +
                ", optimal max " + num(best) + "; ";
  }
  return v;
}

Verdict report_verdict(const std::vector<LemmaReport>& reports, double margin_floor) {
  Verdict v;
  for (const auto& r : reports) {
    const bool ok = r.pass && r.worst_margin >= margin_floor;
    v.pass = v.pass && ok;
    v.detail += r.lemma + " [" + r.domain + "] cases " + std::to_string(r.cases) +
                ", worst margin " + num(r.worst_margin) + "; ";
  }
  return v;
}

Verdict four_lemma() {
  SuiteOptions o;
  o.max_n = 7;
  o.workers = workers();
  return report_verdict(run_suite("four-lemma", o), -1e-12);
}

Verdict three_step() {
  Verdict v;
  for (int n : {10, 50, 100}) {
    const double p = three_step_prob(funnel(n), 0);
    const double formula = funnel_three_step_formula(n);
    const bool ok = std::abs(p - formula) <= 1e-12 && p < 4.0 / n;
    v.pass = v.pass && ok;
    v.detail += "n=" + std::to_string(n) + ": " + num(p) + " vs 4/n " + num(4.0 / n) + "; ";
  }
  return v;
}

Verdict diam_delta() {
  SuiteOptions o;
  o.max_n = 7;
  o.workers = workers();
  Verdict v = report_verdict(run_suite("diam-delta", o), 0.0);
  bool tight_paths = true;
  for (int n = 3; n <= 50; ++n) tight_paths = tight_paths && diam_delta_check(path(n)).worst_margin == 0.0;
  v.pass = v.pass && tight_paths;
  v.detail += tight_paths ? "equality on every path P_3..P_50" : "path equality failed";
  return v;
}

Verdict vc_and_keylemma() {
  SuiteOptions o;
  o.max_n = 6;
  o.t_max = 16;
  o.random_graphs = 50;
  o.random_max_n = 12;
  o.random_t_max = 10;
  o.seed = 107;
  o.workers = workers();
  auto reports = run_suite("vc", o);
  for (auto& r : run_suite("keylemma", o)) reports.push_back(r);
  return report_verdict(reports, -1e-12);
}

Verdict tree_bound() {
  SuiteOptions o;
  o.random_graphs = 100;
  o.random_max_n = 12;
  o.seed = 108;
  return report_verdict(run_suite("tree-bound", o), -1e-12);
}

Verdict regular_bound() { return report_verdict(run_suite("regular-bound", {}), -1e-12); }

Verdict ladder_scaling() {
  const int sizes[] = {40, 80, 160};
  double greedy[3], smart[3];
  Verdict v;
  for (int i = 0; i < 3; ++i) {
    const FamilyInstance inst = make_family(FamilySpec::parse("ladder:" + std::to_string(sizes[i])));
    GameConfig cfg{inst.cop_start, inst.drunk_start};
    greedy[i] = monte_carlo(inst.graph, PolicySpec::parse("greedy:lex"), cfg, 2000, 110 + i,
                            workers()).mean;
    const auto outs = smart_trials("ladder:" + std::to_string(sizes[i]), inst.graph, cfg, 2000,
                                   120 + i);
    smart[i] = summarize(outs, 120 + i).mean;
    v.pass = v.pass && smart[i] <= 1.5 * sizes[i];
  }
  for (int i = 0; i < 2; ++i) {
    const double gr = greedy[i + 1] / greedy[i];
    const double sr = smart[i + 1] / smart[i];
    v.pass = v.pass && gr >= 3.0 && sr <= 2.5;
    v.detail += std::to_string(sizes[i]) + "->" + std::to_string(sizes[i + 1]) + ": greedy x" +
                num(gr) + ", smart x" + num(sr) + "; ";
  }
  v.detail += "smart means " + num(smart[0]) + "/" + num(smart[1]) + "/" + num(smart[2]);
  return v;
}

Verdict lollipop_family() {
  Verdict v;
  for (int n : {64, 216, 512}) {
    const FamilyInstance inst = make_family(FamilySpec::parse("lollipop:n=" + std::to_string(n) + ",c=1"));
    GameConfig cfg{inst.cop_start, inst.drunk_start};
    const auto outs = smart_trials("lollipop:" + std::to_string(n), inst.graph, cfg, 2000, 130 + n);
    const double mean = summarize(outs, 130 + n).mean;
    const double lo = n - 6 * std::cbrt(n), hi = n + 20 * std::pow(n, 0.75);
    v.pass = v.pass && mean >= lo && mean <= hi;
    v.detail += "n=" + std::to_string(n) + ": " + num(mean) + " in [" + num(lo) + ", " + num(hi) + "]; ";
  }
  return v;
}

Verdict oracle_agreement() {
  const char* policies[] = {"oscillate", "random", "greedy:lex", "greedy:random", "hitting"};
  const auto graphs = random_graph_sample(20, 15, 140);
  Verdict v;
  double worst_z = 0.0;
  double worst_dominance = 0.0;
  int comparisons = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    const Vertex cop = 0;
    const DistanceField f = bfs(g, cop);
    const Vertex drunk =
        static_cast<Vertex>(std::max_element(f.dist.begin(), f.dist.end()) - f.dist.begin());
    SolverOptions opts = tight();
    opts.oscillate_anchor = cop;
    const ValueTable best = optimal_capture_values(g, opts);
    for (const char* p : policies) {
      const PolicySpec spec = PolicySpec::parse(p);
      const ValueTable exact = exact_expected_capture(g, spec, opts);
      const SimulationReport mc =
          monte_carlo(g, spec, GameConfig{cop, drunk}, 100000, 150 + gi, workers());
      const double diff = std::abs(mc.mean - exact.at(cop, drunk));
      const double z = mc.std_error > 0 ? diff / mc.std_error : (diff > 1e-9 ? INFINITY : 0.0);
      worst_z = std::max(worst_z, z);
      ++comparisons;
      if (z > 4.0) {
        v.pass = false;
        v.detail += std::string(p) + " on graph " + std::to_string(gi) + " off by " + num(z) + " se; ";
      }
      for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = 0; b < g.order(); ++b) {
          worst_dominance = std::max(worst_dominance, best.at(a, b) - exact.at(a, b));
        }
      }
    }
  }
  if (worst_dominance > 1e-9) v.pass = false;
  v.detail += std::to_string(comparisons) + " policy/graph pairs, worst |z| " + num(worst_z) +
              ", worst optimal-minus-policy " + num(worst_dominance);
  return v;
}

Verdict stage_telemetry() {
  Verdict v;
  std::int64_t trials = 0, arrivals = 0, strict_trials = 0, stage4_moves = 0;
  auto check = [&](const RecordedRun& run, const TrialOutcome& o, bool strict) {
    const Graph& g = run.graph;
    const int d0 = g.distance(run.cfg.cop_start, run.cfg.drunk_start);
    const auto& s = *o.stages;
    const auto& tr = o.trajectory;
    const std::int64_t t1 = s.stage_time[0];
    bool ok = t1 <= d0 && g.distance(tr[t1].first, run.cfg.drunk_start) == d0 - t1;
    if (strict) {
      // Only a capture on the way can cut stage 1 short.
      ok = ok && t1 == std::min<std::int64_t>(d0, o.capture_time);
    } else if (s.stage > 1 && s.early_exit_from != 1) {
      ++arrivals;
      ok = ok && t1 == d0;
    }
    // Stage 4 is terminal, so it covers the last stage_time[3] moves.
    const std::int64_t moves = o.capture_time;
    for (std::int64_t m = moves - s.stage_time[3] + 1; m <= moves; ++m) {
      ++stage4_moves;
      ok = ok && g.distance(tr[m].first, tr[m - 1].second) <= 2;
    }
    if (!ok && v.pass) {
      v.pass = false;
      v.detail += std::string(strict ? "strict " : "") + "violation in " + run.label + " seed " +
                  std::to_string(o.seed) + "; ";
    }
  };
  for (const auto& run : g_smart_runs) {
    for (const auto& o : run.outcomes) {
      ++trials;
      check(run, o, false);
    }
    GameConfig cfg = run.cfg;
    cfg.record_trajectory = true;
    const auto strict =
        run_trials(run.graph, PolicySpec::parse("smart:strict"), cfg, 1000, 1300, workers());
    for (const auto& o : strict) {
      ++strict_trials;
      check(run, o, true);
    }
  }
  v.detail += std::to_string(trials) + " smart trials (" + std::to_string(arrivals) +
              " with stage 1 ended by arrival), " + std::to_string(strict_trials) +
              " smart:strict trials with T_1 = d unless captured first, " +
              std::to_string(stage4_moves) + " stage-4 moves checked";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"bipartite example", bipartite_example},
      {"path example", path_example},
      {"projective planes", projective_planes},
      {"four-step lemma", four_lemma},
      {"three-step counterexample", three_step},
      {"diameter plus max degree", diam_delta},
      {"walk bounds", vc_and_keylemma},
      {"tree bound", tree_bound},
      {"regular-graph bound", regular_bound},
      {"ladder scaling", ladder_scaling},
      {"lollipop family", lollipop_family},
      {"oracle agreement", oracle_agreement},
      {"stage telemetry", stage_telemetry},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !v.pass;
    std::printf("%s %2zu %s (%.1fs): %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
