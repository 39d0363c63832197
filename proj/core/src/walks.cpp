#include "drunkcop/walks.hpp"

#include <stdexcept>

namespace drunkcop {

std::vector<double> walk_step(const Graph& g, const std::vector<double>& mass) {
  std::vector<double> next(mass.size(), 0.0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mass[v] == 0.0) continue;
    const double share = mass[v] / g.degree(v);
    for (Vertex w : g.neighbors(v)) next[w] += share;
  }
  return next;
}

DistanceDistribution tstep_distribution(const Graph& g, Vertex source, int t) {
  if (!g.contains(source)) throw std::out_of_range("walk source out of range");
  if (t < 0) throw std::invalid_argument("walk horizon must be non-negative");
  if (t > 0 && g.order() == 1) {
    throw std::invalid_argument("no random walk on a single vertex");
  }
  DistanceDistribution out{source, t, std::vector<double>(g.order(), 0.0)};
  out.prob[source] = 1.0;
  for (int step = 0; step < t; ++step) out.prob = walk_step(g, out.prob);
  return out;
}

}  // namespace drunkcop
