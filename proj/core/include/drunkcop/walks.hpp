#pragma once

#include <vector>

#include "drunkcop/graph.hpp"

namespace drunkcop {

// p^t(source, .) for the simple random walk.
struct DistanceDistribution {
  Vertex source = 0;
  int horizon = 0;
  std::vector<double> prob;
};

DistanceDistribution tstep_distribution(const Graph& g, Vertex source, int t);

// One push-forward step of the uniform-neighbor walk.
std::vector<double> walk_step(const Graph& g, const std::vector<double>& mass);

}  // namespace drunkcop
