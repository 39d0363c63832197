#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph adjacency accessors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "drunkcop/graph.hpp"

namespace oracle {

using drunkcop::Edge;
using drunkcop::Graph;
using drunkcop::Vertex;

constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int diameter(const std::vector<std::vector<int>>& d) {
  int best = 0;
  for (const auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

// Connected labeled graphs by union-find over every edge subset.
inline std::uint64_t count_connected(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::uint64_t count = 0;
  std::vector<int> parent(n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t s = 0; s < total; ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = n;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!(s >> e & 1)) continue;
      const int a = find(pairs[e].first), b = find(pairs[e].second);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    if (comps == 1) ++count;
  }
  return count;
}

// Random connected graph: random spanning tree plus extra edges.
inline Graph random_graph(std::mt19937_64& rng, int n, double extra_prob) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> have(n, std::vector<bool>(n, false));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int a = order[i], b = order[pick(rng)];
    edges.push_back({std::min(a, b), std::max(a, b)});
    have[a][b] = have[b][a] = true;
  }
  std::bernoulli_distribution coin(extra_prob);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!have[i][j] && coin(rng)) edges.push_back({i, j});
  return Graph::build(n, edges);
}

// Hitting times to `target` by plain Gauss-Seidel iteration.
inline std::vector<double> hitting_times_gs(const Graph& g, Vertex target) {
  std::vector<double> h(g.order(), 0.0);
  for (int sweep = 0; sweep < 1'000'000; ++sweep) {
    double change = 0.0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == target) continue;
      double s = 0.0;
      for (Vertex w : g.neighbors(v)) s += h[w];
      const double next = 1.0 + s / g.degree(v);
      change = std::max(change, std::abs(next - h[v]));
      h[v] = next;
    }
    if (change < 1e-13) break;
  }
  return h;
}

// Dense solve with partial pivoting.
inline std::vector<double> gauss_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-300) throw std::runtime_error("singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

enum class Cop { kGreedyLex, kGreedyRandom, kRandom, kOscillate, kHitting };

// Cop move distribution, written from the policy definitions.
inline std::vector<std::pair<Vertex, double>> cop_moves(
    const Graph& g, const std::vector<std::vector<int>>& d,
    const std::vector<std::vector<double>>& hit, Cop cop, Vertex anchor, Vertex c, Vertex x) {
  std::vector<std::pair<Vertex, double>> out;
  auto nbrs = std::vector<Vertex>(g.neighbors(c).begin(), g.neighbors(c).end());
  std::sort(nbrs.begin(), nbrs.end());
  switch (cop) {
    case Cop::kRandom:
      for (Vertex w : nbrs) out.emplace_back(w, 1.0 / nbrs.size());
      return out;
    case Cop::kGreedyLex:
    case Cop::kGreedyRandom: {
      int best = kInf;
      for (Vertex w : nbrs) best = std::min(best, d[w][x]);
      std::vector<Vertex> mins;
      for (Vertex w : nbrs)
        if (d[w][x] == best) mins.push_back(w);
      if (cop == Cop::kGreedyLex) return {{mins.front(), 1.0}};
      for (Vertex w : mins) out.emplace_back(w, 1.0 / mins.size());
      return out;
    }
    case Cop::kOscillate: {
      std::vector<Vertex> an(g.neighbors(anchor).begin(), g.neighbors(anchor).end());
      const Vertex partner = *std::min_element(an.begin(), an.end());
      if (c == anchor) return {{partner, 1.0}};
      if (c == partner) return {{anchor, 1.0}};
      for (Vertex w : nbrs)
        if (d[w][anchor] == d[c][anchor] - 1) return {{w, 1.0}};
      throw std::logic_error("no geodesic step");
    }
    case Cop::kHitting: {
      for (Vertex w : nbrs)
        if (w == x) return {{w, 1.0}};
      Vertex best = nbrs.front();
      for (Vertex w : nbrs) {
        const double hb = hit[best][x], hw = hit[w][x];
        if (hw < hb - 1e-9 * std::max(1.0, std::abs(hb))) best = w;
      }
      return {{best, 1.0}};
    }
  }
  return out;
}

// Expected capture times E(c, x) from the joint chain, solved densely.
// hit[t][v] is the expected time for a walk from v to reach t.
inline std::vector<std::vector<double>> exact_values(const Graph& g, Cop cop, Vertex anchor = 0) {
  const int n = g.order();
  const auto d = floyd_warshall(g);
  std::vector<std::vector<double>> hit;
  if (cop == Cop::kHitting) {
    for (Vertex t = 0; t < n; ++t) hit.push_back(hitting_times_gs(g, t));
  }
  auto index = [n](Vertex c, Vertex x) { return c * n + x; };
  const int m = n * n;
  std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
  std::vector<double> b(m, 0.0);
  for (Vertex c = 0; c < n; ++c) {
    for (Vertex x = 0; x < n; ++x) {
      const int row = index(c, x);
      a[row][row] = 1.0;
      if (c == x) continue;
      b[row] = 1.0;
      for (auto [c2, pc] : cop_moves(g, d, hit, cop, anchor, c, x)) {
        if (c2 == x) continue;
        const double px = pc / g.degree(x);
        for (Vertex x2 : g.neighbors(x)) {
          if (x2 == c2) continue;
          a[row][index(c2, x2)] -= px;
        }
      }
    }
  }
  const auto sol = gauss_solve(std::move(a), std::move(b));
  std::vector<std::vector<double>> out(n, std::vector<double>(n));
  for (Vertex c = 0; c < n; ++c)
    for (Vertex x = 0; x < n; ++x) out[c][x] = sol[index(c, x)];
  return out;
}

// p^t(source, .) by enumerating every walk of length t.
inline std::vector<double> walk_enumeration(const Graph& g, Vertex source, int t) {
  std::vector<double> p(g.order(), 0.0);
  auto rec = [&](auto&& self, Vertex v, int left, double w) -> void {
    if (left == 0) {
      p[v] += w;
      return;
    }
    const double share = w / g.degree(v);
    for (Vertex u : g.neighbors(v)) self(self, u, left - 1, share);
  };
  rec(rec, source, t, 1.0);
  return p;
}

}  // namespace oracle
