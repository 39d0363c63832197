#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drunkcop/graph.hpp"

namespace drunkcop {

// Slack for floating-point round-off on non-strict inequality checks.
inline constexpr double kGuardBand = 1e-12;

struct Counterexample {
  int n = 0;
  std::vector<Edge> edges;
  std::string witness;
  double margin = 0.0;
};

// Outcome of checking one inequality over a domain of graphs. Margins are
// signed slack: positive means the inequality held with room to spare.
// Logarithms in the bounds are natural.
struct LemmaReport {
  std::string lemma;
  std::string domain;
  double worst_margin = 0.0;
  bool pass = true;
  std::int64_t cases = 0;
  std::string log_base = "e";
  std::optional<Counterexample> counterexample;

  // Folds `other` into this report: min margin, summed cases, and the
  // failing case with the smaller margin.
  void absorb(const LemmaReport& other);

  std::string to_json() const;
  static LemmaReport from_json(std::string_view text);
};

// ---- bounds ----------------------------------------------------------------

// sqrt(e) * sqrt(deg(y)/deg(x)) * exp(-d^2 / 2t)
double varopoulos_carne_bound(int deg_x, int deg_y, int distance, int t);
// 1 + sqrt(t) * sqrt(1 + 5 ln n)
double keylemma_bound(int n, int t);
// 1 / (4 n^(2/3))
double four_lemma_bound(int n);
// 2/n + (1 - 2/n)(2/n)
double funnel_three_step_formula(int n);

// ---- walk probabilities ---------------------------------------------------

// E[d(x0, x_t)] for the walk started at x0.
double expected_walk_distance(const Graph& g, Vertex x0, int t);
// P(d(x0, x4) < 4)
double four_step_prob(const Graph& g, Vertex x0);
// P(d(x0, x3) < 3)
double three_step_prob(const Graph& g, Vertex x0);

// ---- single-graph checks --------------------------------------------------

// p^t(x,y) <= VC bound + guard, every x, y and 1 <= t <= t_max.
LemmaReport vc_bound_check(const Graph& g, int t_max);
// E[d(x0,x_t)] < keylemma bound for every start x0, at the single horizon t.
LemmaReport expected_distance_check(const Graph& g, int t);
// expected_distance_check for every t in 1..t_max.
LemmaReport keylemma_check(const Graph& g, int t_max);
// four_step_prob(g, x0) >= 1/(4 n^(2/3)) - guard for every x0.
LemmaReport four_lemma_check(const Graph& g);
// diam(G) + max degree <= n + 1.
LemmaReport diam_delta_check(const Graph& g);
// Greedy (lex) exact capture times: max <= r diam / 2 and < 3n/2. Throws
// std::invalid_argument on irregular graphs.
LemmaReport regular_greedy_bound_check(const Graph& g);
// Greedy (lex) exact capture time <= n from every start pair of a tree.
LemmaReport tree_bound_check(const Graph& tree);

// ---- suites ---------------------------------------------------------------

using GraphCheck = std::function<LemmaReport(const Graph&)>;

// Runs `check` over every labeled connected graph with n_min <= n <= n_max.
LemmaReport exhaustive_check(const std::string& lemma, int n_min, int n_max,
                             int workers, const GraphCheck& check);

LemmaReport four_lemma_check(int n_max, int workers);
LemmaReport diam_delta_check(int n_max, int workers);

// funnel(n) values against the closed form (|diff| <= guard) and the 4/n
// bound, for each listed n.
LemmaReport three_step_check(std::span<const int> sizes);

}  // namespace drunkcop
