#pragma once

#include <vector>

#include "drunkcop/graph.hpp"

namespace drunkcop {

// Expected number of simple-random-walk steps from each vertex to `target`:
// h(target) = 0, h(v) = 1 + mean of h over the neighbors of v.
// Solved directly on the grounded Laplacian, which is positive definite on a
// connected graph.
std::vector<double> hitting_times(const Graph& g, Vertex target);

// All-pairs table, one grounded-Laplacian solve per target.
class HittingTimeTable {
 public:
  explicit HittingTimeTable(const Graph& g);

  double operator()(Vertex from, Vertex to) const {
    return times_[static_cast<std::size_t>(to) * n_ + from];
  }
  int order() const noexcept { return n_; }

 private:
  int n_ = 0;
  std::vector<double> times_;  // row per target
};

}  // namespace drunkcop
