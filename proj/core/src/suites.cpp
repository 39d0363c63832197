#include "drunkcop/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "drunkcop/generators.hpp"
#include "drunkcop/monte_carlo.hpp"

namespace drunkcop {
namespace {

int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

void guard(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

LemmaReport sample_report(const std::string& lemma, const std::string& domain,
                          const std::vector<Graph>& graphs, const GraphCheck& check) {
  LemmaReport total;
  total.lemma = lemma;
  total.domain = domain;
  for (const Graph& g : graphs) total.absorb(check(g));
  return total;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "vc", "keylemma", "four-lemma", "three-step", "diam-delta", "regular-bound", "tree-bound"};
  return names;
}

std::vector<Graph> random_graph_sample(int count, int max_n, std::uint64_t seed) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 3 + i % (max_n - 2);
    out.push_back(random_connected(n, 0.3, derive_seed(seed, i)));
  }
  return out;
}

std::vector<Graph> random_tree_sample(int count, int max_n, std::uint64_t seed) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % (max_n - 1);
    out.push_back(random_tree(n, derive_seed(seed, i)));
  }
  return out;
}

std::vector<std::pair<std::string, Graph>> regular_sample() {
  return {
      {"cycle:6", cycle(6)},
      {"cycle:9", cycle(9)},
      {"complete:4", complete(4)},
      {"complete_bipartite:3,3", complete_bipartite(3, 3)},
      {"complete_bipartite:5,5", complete_bipartite(5, 5)},
      {"hypercube:3", hypercube(3)},
      {"petersen", petersen()},
      {"projective_incidence:2", projective_incidence(2)},
      {"projective_incidence:3", projective_incidence(3)},
  };
}

std::vector<std::pair<std::string, Graph>> family_sample() {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n : {2, 3, 5, 10, 100}) out.emplace_back("path:" + std::to_string(n), path(n));
  for (int n : {3, 4, 5, 6, 20}) out.emplace_back("cycle:" + std::to_string(n), cycle(n));
  out.emplace_back("complete_bipartite:3,3", complete_bipartite(3, 3));
  out.emplace_back("complete_bipartite:10,10", complete_bipartite(10, 10));
  for (int n : {10, 64, 216, 512}) {
    out.emplace_back("lollipop:" + std::to_string(n) + ",1", lollipop(n, 1.0));
  }
  for (int n : {16, 40, 80, 160}) {
    out.emplace_back("ladder_basement:" + std::to_string(n), ladder_basement(n));
  }
  for (int q : {2, 3, 5}) {
    out.emplace_back("projective_incidence:" + std::to_string(q), projective_incidence(q));
  }
  for (int n : {6, 10, 50, 100}) out.emplace_back("funnel:" + std::to_string(n), funnel(n));
  out.emplace_back("petersen", petersen());
  out.emplace_back("hypercube:3", hypercube(3));
  out.emplace_back("complete:4", complete(4));
  return out;
}

std::vector<LemmaReport> run_suite(std::string_view name, const SuiteOptions& o) {
  const int workers = std::max(1, o.workers);
  if (name == "vc" || name == "keylemma") {
    const bool vc = name == "vc";
    const int max_n = or_default(o.max_n, 6);
    const int t_max = or_default(o.t_max, 16);
    const int count = or_default(o.random_graphs, 50);
    const int rand_n = or_default(o.random_max_n, 12);
    const int rand_t = or_default(o.random_t_max, 10);
    guard(max_n <= kMaxEnumerationOrder, "max_n must be <= 8");
    guard(t_max <= 256 && rand_t <= 256, "t_max must be <= 256");
    guard(rand_n >= 3 && rand_n <= 200, "random graph order must be in 3..200");
    const std::string lemma = vc ? "varopoulos-carne" : "keylemma";
    auto exhaustive_fn = [vc, t_max](const Graph& g) {
      return vc ? vc_bound_check(g, t_max) : keylemma_check(g, t_max);
    };
    auto random_fn = [vc, rand_t](const Graph& g) {
      return vc ? vc_bound_check(g, rand_t) : keylemma_check(g, rand_t);
    };
    LemmaReport exhaustive = exhaustive_check(lemma, 2, max_n, workers, exhaustive_fn);
    exhaustive.domain += ", t <= " + std::to_string(t_max);
    const auto graphs = random_graph_sample(count, rand_n, o.seed);
    LemmaReport random = sample_report(
        lemma,
        std::to_string(count) + " random connected graphs, n <= " + std::to_string(rand_n) +
            ", t <= " + std::to_string(rand_t) + ", seed " + std::to_string(o.seed),
        graphs, random_fn);
    return {exhaustive, random};
  }
  if (name == "four-lemma") {
    const int max_n = or_default(o.max_n, 7);
    guard(max_n <= kMaxEnumerationOrder, "max_n must be <= 8");
    return {four_lemma_check(max_n, workers)};
  }
  if (name == "three-step") {
    const int sizes[] = {10, 50, 100};
    return {three_step_check(sizes)};
  }
  if (name == "diam-delta") {
    const int max_n = or_default(o.max_n, 7);
    guard(max_n <= kMaxEnumerationOrder, "max_n must be <= 8");
    LemmaReport families;
    families.lemma = "diam-delta";
    families.domain = "generated family instances";
    for (const auto& [label, g] : family_sample()) families.absorb(diam_delta_check(g));
    return {diam_delta_check(max_n, workers), families};
  }
  if (name == "regular-bound") {
    LemmaReport r;
    r.lemma = "regular-bound";
    r.domain = "C6, C9, K4, K3,3, K5,5, Q3, Petersen, PG(2,2), PG(2,3) incidence";
    for (const auto& [label, g] : regular_sample()) r.absorb(regular_greedy_bound_check(g));
    return {r};
  }
  if (name == "tree-bound") {
    const int count = or_default(o.random_graphs, 100);
    const int max_n = or_default(o.random_max_n, 12);
    guard(max_n >= 2 && max_n <= 60, "tree order must be in 2..60");
    const auto trees = random_tree_sample(count, max_n, o.seed);
    return {sample_report("tree-bound",
                          std::to_string(count) + " random trees, n <= " +
                              std::to_string(max_n) + ", seed " + std::to_string(o.seed),
                          trees, [](const Graph& g) { return tree_bound_check(g); })};
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace drunkcop
