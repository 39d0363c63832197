#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace drunkcop {

// Vertices are dense ids 0..n-1.
using Vertex = std::int32_t;
using Rng = std::mt19937_64;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  kEmpty,
  kOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kDisconnected,
  kParse,
};

const char* to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

// kAuto keeps the all-pairs table for graphs with at most kMaxCachedOrder
// vertices; larger graphs fall back to BFS per query.
enum class DistanceCache { kAuto, kAlways, kNever };

inline constexpr int kMaxCachedOrder = 2000;

// Immutable simple connected undirected graph stored as sorted CSR
// adjacency. Copies share the distance table.
class Graph {
 public:
  static Graph build(int n, std::span<const Edge> edges,
                     DistanceCache cache = DistanceCache::kAuto);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const noexcept { return max_degree_; }
  int diameter() const noexcept { return diameter_; }

  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  // Hop distance; O(1) with the cache, one BFS otherwise.
  int distance(Vertex u, Vertex v) const;
  bool has_distance_cache() const noexcept { return dist_ != nullptr; }

  // Common degree when every vertex has the same degree.
  std::optional<int> regularity() const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

 private:
  Graph() = default;

  int n_ = 0;
  int max_degree_ = 0;
  int diameter_ = 0;
  std::vector<int> offsets_;
  std::vector<Vertex> adj_;
  std::shared_ptr<const std::vector<std::int32_t>> dist_;  // row-major n*n
};

struct DistanceField {
  Vertex source = 0;
  std::vector<int> dist;
};

DistanceField bfs(const Graph& g, Vertex source);

// Shortest cycle length; nullopt for trees.
std::optional<int> girth(const Graph& g);

enum class TieBreak { kLex, kRandom };

// A neighbor of `from` one step closer to `target`. kRandom draws uniformly
// among the closer neighbors and requires `rng`.
Vertex geodesic_next(const Graph& g, Vertex from, Vertex target,
                     TieBreak tie_break, Rng* rng = nullptr);

}  // namespace drunkcop
