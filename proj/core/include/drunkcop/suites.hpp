#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drunkcop/graph.hpp"
#include "drunkcop/lemmas.hpp"

namespace drunkcop {

// Parameters of the named verification suites. Zero means "suite default".
struct SuiteOptions {
  int max_n = 0;          // exhaustive enumeration bound
  int t_max = 0;          // walk horizon for the exhaustive part
  int random_graphs = 0;  // size of the random sample
  int random_max_n = 0;
  int random_t_max = 0;
  std::uint64_t seed = 1;
  int workers = 1;
};

// "vc", "keylemma", "four-lemma", "three-step", "diam-delta",
// "regular-bound", "tree-bound".
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for unknown names or out-of-guard options.
std::vector<LemmaReport> run_suite(std::string_view name, const SuiteOptions& options);

// Seeded sample of connected random graphs, orders cycling through
// 3..max_n, edge probability 0.3.
std::vector<Graph> random_graph_sample(int count, int max_n, std::uint64_t seed);
std::vector<Graph> random_tree_sample(int count, int max_n, std::uint64_t seed);

// Regular graphs used by the regular-bound suite: C_6, C_9, K_4, K_{3,3},
// K_{5,5}, the 3-cube, the Petersen graph and the order-2 and order-3
// projective incidence graphs.
std::vector<std::pair<std::string, Graph>> regular_sample();

// Every named family instance the test suites generate, for spot checks.
std::vector<std::pair<std::string, Graph>> family_sample();

}  // namespace drunkcop
