#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "drunkcop/graph.hpp"

namespace drunkcop {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Paths are labeled 0..n-1 in order.
Graph path(int n);
// Cycle 0-1-...-(n-1)-0.
Graph cycle(int n);
// Sides 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);
Graph complete(int n);
// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();
// Vertices are bit strings of length `dim`.
Graph hypercube(int dim);

// Clique size k = max(2, round(c * cbrt(n))).
int lollipop_clique_size(int n, double c);
// Clique on 0..k-1; the pendant path k-1, k, ..., n-1 hangs off vertex k-1,
// so n-1 is the far end of the path.
Graph lollipop(int n, double c);

// Ladder of two rails of L = n/4 levels feeding a complete bipartite basement
// K_{A,B} with |A| = |B| = n/4.
//
// Rails are interleaved: rail one at level i is vertex 2i, rail two at level
// i is 2i+1, rungs join 2i -- 2i+1, and level 0 is the top. Rail one's
// bottom (2L-2) is joined to every vertex of A = 2L..2L+|A|-1, rail two's
// bottom (2L-1) to every vertex of B = 2L+|A|..n-1.
struct LadderLayout {
  int levels = 0;
  Vertex rail_one_bottom = 0;
  Vertex rail_two_bottom = 0;
  Vertex side_a_first = 0;
  int side_a_size = 0;
  Vertex side_b_first = 0;
  int side_b_size = 0;
  Vertex cop_start = 0;    // top of rail one
  Vertex drunk_start = 0;  // first vertex of basement side A

  bool in_basement(Vertex v) const { return v >= side_a_first; }
};

LadderLayout ladder_layout(int n);
Graph ladder_basement(int n);

// Requires q prime. Points 0..N-1 and lines N..2N-1 with N = q^2+q+1; both
// are indexed by normalized vectors of (Z/q)^3 (first nonzero entry 1), and a
// point lies on a line when their dot product vanishes mod q.
Graph projective_incidence(int q);
bool is_prime(int q);

// x0 = 0, v1 = 1, A2 = 2..m+1, A3 = m+2..n-1 with m = (n-2)/2. Edges x0-v1,
// v1-A2, and all of A2 x A3.
Graph funnel(int n);

struct RandomConnectedInfo {
  int attempts = 0;
  bool tree_overlay = false;  // rejection cap hit; spanning tree added
};

inline constexpr int kRandomConnectedRetries = 200;

// Erdos-Renyi G(n, p) conditioned on connectivity by rejection; after
// kRandomConnectedRetries failures a random spanning tree is overlaid on the
// last draw.
Graph random_connected(int n, double edge_prob, std::uint64_t seed,
                       RandomConnectedInfo* info = nullptr);
// Uniform random attachment: vertex i joins a uniform vertex in 0..i-1.
Graph random_tree(int n, std::uint64_t seed);

// Exhaustive labeled enumeration by edge bitmask. Pair (i, j), i < j, maps to
// bit index j*(j-1)/2 + i.
inline constexpr int kMaxEnumerationOrder = 8;

std::uint64_t edge_mask_count(int n);
bool mask_is_connected(int n, std::uint64_t mask);
Graph graph_from_mask(int n, std::uint64_t mask);

// Calls fn on every labeled connected simple graph on n vertices, exactly once.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

// Same stream split across `workers` threads over disjoint mask ranges.
// fn receives the worker index; each graph goes to exactly one worker.
void for_each_connected_graph_parallel(
    int n, int workers, const std::function<void(int, const Graph&)>& fn);

std::uint64_t count_connected_graphs(int n);

// A family name plus its parameters, e.g. "path:100", "lollipop:n=64,c=1",
// "projective_incidence:q=3". Short aliases are accepted (bipartite, ladder,
// projective, heawood, random, tree).
struct FamilySpec {
  std::string family;
  int n = 0;
  int a = 0;
  int b = 0;
  int q = 0;
  double c = 1.0;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

struct FamilyInstance {
  Graph graph;
  Vertex cop_start = 0;
  Vertex drunk_start = 0;
};

// Builds the family and its conventional starting positions (path ends,
// same bipartite side, far lollipop end vs clique, ladder top vs basement).
FamilyInstance make_family(const FamilySpec& spec);

}  // namespace drunkcop
