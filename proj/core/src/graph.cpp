#include "drunkcop/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

namespace drunkcop {

const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kEmpty: return "empty";
    case GraphErrorKind::kOutOfRange: return "out_of_range";
    case GraphErrorKind::kSelfLoop: return "self_loop";
    case GraphErrorKind::kDuplicateEdge: return "duplicate_edge";
    case GraphErrorKind::kDisconnected: return "disconnected";
    case GraphErrorKind::kParse: return "parse";
  }
  return "unknown";
}

namespace {

// Fills `dist` (size n, -1 = unreached) and returns the eccentricity.
int bfs_into(const std::vector<int>& offsets, const std::vector<Vertex>& adj,
             Vertex source, std::int32_t* dist, std::vector<Vertex>& queue) {
  const int n = static_cast<int>(offsets.size()) - 1;
  std::fill(dist, dist + n, -1);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  int ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const int du = dist[u];
    ecc = du;
    for (int k = offsets[u]; k < offsets[u + 1]; ++k) {
      const Vertex w = adj[k];
      if (dist[w] < 0) {
        dist[w] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return ecc;
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges, DistanceCache cache) {
  if (n <= 0) {
    throw GraphError(GraphErrorKind::kEmpty, "graph must have at least one vertex");
  }
  std::vector<int> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      std::ostringstream os;
      os << "edge (" << e.u << "," << e.v << ") has an endpoint outside 0.."
         << n - 1;
      throw GraphError(GraphErrorKind::kOutOfRange, os.str());
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::kSelfLoop,
                       "self-loop at vertex " + std::to_string(e.u));
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adj_[fill[e.u]++] = e.v;
    g.adj_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = g.adj_.begin() + g.offsets_[v];
    auto last = g.adj_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      std::ostringstream os;
      os << "duplicate edge (" << v << "," << *dup << ")";
      throw GraphError(GraphErrorKind::kDuplicateEdge, os.str());
    }
    g.max_degree_ = std::max(g.max_degree_, degree[v]);
  }

  const bool keep = cache == DistanceCache::kAlways ||
                    (cache == DistanceCache::kAuto && n <= kMaxCachedOrder);
  std::vector<Vertex> queue;
  queue.reserve(n);
  if (keep) {
    auto table = std::make_shared<std::vector<std::int32_t>>(
        static_cast<std::size_t>(n) * n);
    for (Vertex s = 0; s < n; ++s) {
      std::int32_t* row = table->data() + static_cast<std::size_t>(s) * n;
      const int ecc = bfs_into(g.offsets_, g.adj_, s, row, queue);
      if (static_cast<int>(queue.size()) != n) {
        throw GraphError(GraphErrorKind::kDisconnected,
                         "graph is disconnected");
      }
      g.diameter_ = std::max(g.diameter_, ecc);
    }
    g.dist_ = std::move(table);
  } else {
    std::vector<std::int32_t> row(n);
    for (Vertex s = 0; s < n; ++s) {
      const int ecc = bfs_into(g.offsets_, g.adj_, s, row.data(), queue);
      if (static_cast<int>(queue.size()) != n) {
        throw GraphError(GraphErrorKind::kDisconnected,
                         "graph is disconnected");
      }
      g.diameter_ = std::max(g.diameter_, ecc);
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::distance(Vertex u, Vertex v) const {
  if (dist_) return (*dist_)[static_cast<std::size_t>(u) * n_ + v];
  if (u == v) return 0;
  return bfs(*this, u).dist[v];
}

std::optional<int> Graph::regularity() const {
  const int d0 = degree(0);
  for (Vertex v = 1; v < n_; ++v) {
    if (degree(v) != d0) return std::nullopt;
  }
  return d0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

DistanceField bfs(const Graph& g, Vertex source) {
  if (!g.contains(source)) {
    throw std::out_of_range("bfs source " + std::to_string(source) +
                            " out of range");
  }
  const int n = g.order();
  DistanceField field{source, std::vector<int>(n, -1)};
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(source);
  field.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (field.dist[w] < 0) {
        field.dist[w] = field.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return field;
}

std::optional<int> girth(const Graph& g) {
  // A BFS from every root; the first non-tree edge seen from root r closes a
  // cycle of length dist[u] + dist[w] + 1 through r or shorter elsewhere, and
  // the minimum over all roots is exact.
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

Vertex geodesic_next(const Graph& g, Vertex from, Vertex target,
                     TieBreak tie_break, Rng* rng) {
  assert(g.contains(from) && g.contains(target));
  if (from == target) {
    throw std::invalid_argument("geodesic_next requires from != target");
  }
  const int want = g.distance(from, target) - 1;
  if (tie_break == TieBreak::kLex) {
    for (Vertex w : g.neighbors(from)) {
      if (g.distance(w, target) == want) return w;
    }
  } else {
    if (rng == nullptr) {
      throw std::invalid_argument("random tie-break needs a randomness source");
    }
    Vertex candidates[64];
    std::vector<Vertex> overflow;
    int count = 0;
    for (Vertex w : g.neighbors(from)) {
      if (g.distance(w, target) != want) continue;
      if (count < 64) {
        candidates[count] = w;
      } else {
        if (overflow.empty()) overflow.assign(candidates, candidates + 64);
        overflow.push_back(w);
      }
      ++count;
    }
    if (count > 0) {
      std::uniform_int_distribution<int> pick(0, count - 1);
      const int k = pick(*rng);
      return count <= 64 ? candidates[k] : overflow[k];
    }
  }
  throw std::logic_error("no geodesic neighbor found");  // unreachable on a connected graph
}

}  // namespace drunkcop
