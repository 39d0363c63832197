#include "drunkcop/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

namespace drunkcop {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw GeneratorError(msg);
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Graph path(int n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::build(n, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return Graph::build(a + b, edges);
}

Graph complete(int n) {
  require(n >= 2, "complete needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::build(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
    edges.push_back({i, 5 + i});
  }
  return Graph::build(10, edges);
}

Graph hypercube(int dim) {
  require(dim >= 1 && dim <= 16, "hypercube needs 1 <= dim <= 16");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int bit = 0; bit < dim; ++bit) {
      const Vertex w = v ^ (1 << bit);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph::build(n, edges);
}

int lollipop_clique_size(int n, double c) {
  require(n >= 1 && c > 0.0, "lollipop needs n >= 1 and c > 0");
  const long k = std::lround(c * std::cbrt(static_cast<double>(n)));
  return static_cast<int>(std::max(2L, k));
}

Graph lollipop(int n, double c) {
  const int k = lollipop_clique_size(n, c);
  require(n - k >= 1, "lollipop(n, c) leaves no room for the path");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.push_back({u, v});
  }
  for (Vertex v = k - 1; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::build(n, edges);
}

LadderLayout ladder_layout(int n) {
  require(n >= 12 && n % 4 == 0, "ladder_basement needs n >= 12, n divisible by 4");
  LadderLayout lay;
  lay.levels = n / 4;
  const int basement = n - 2 * lay.levels;
  lay.rail_one_bottom = 2 * (lay.levels - 1);
  lay.rail_two_bottom = 2 * (lay.levels - 1) + 1;
  lay.side_a_first = 2 * lay.levels;
  lay.side_a_size = basement / 2;
  lay.side_b_first = lay.side_a_first + lay.side_a_size;
  lay.side_b_size = basement - lay.side_a_size;
  lay.cop_start = 0;
  lay.drunk_start = lay.side_a_first;
  return lay;
}

Graph ladder_basement(int n) {
  const LadderLayout lay = ladder_layout(n);
  std::vector<Edge> edges;
  for (int level = 0; level < lay.levels; ++level) {
    const Vertex one = 2 * level;
    const Vertex two = 2 * level + 1;
    edges.push_back({one, two});
    if (level + 1 < lay.levels) {
      edges.push_back({one, one + 2});
      edges.push_back({two, two + 2});
    }
  }
  for (int i = 0; i < lay.side_a_size; ++i) {
    const Vertex a = lay.side_a_first + i;
    edges.push_back({lay.rail_one_bottom, a});
    for (int j = 0; j < lay.side_b_size; ++j) {
      edges.push_back({a, lay.side_b_first + j});
    }
  }
  for (int j = 0; j < lay.side_b_size; ++j) {
    edges.push_back({lay.rail_two_bottom, lay.side_b_first + j});
  }
  return Graph::build(n, edges);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

Graph projective_incidence(int q) {
  require(is_prime(q), "projective_incidence needs a prime order, got " +
                           std::to_string(q));
  using Vec = std::array<int, 3>;
  std::vector<Vec> reps;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
  }
  for (int a = 0; a < q; ++a) reps.push_back({0, 1, a});
  reps.push_back({0, 0, 1});
  const int count = static_cast<int>(reps.size());  // q^2 + q + 1
  std::vector<Edge> edges;
  for (int p = 0; p < count; ++p) {
    for (int l = 0; l < count; ++l) {
      const int dot = reps[p][0] * reps[l][0] + reps[p][1] * reps[l][1] +
                      reps[p][2] * reps[l][2];
      if (dot % q == 0) edges.push_back({p, count + l});
    }
  }
  return Graph::build(2 * count, edges);
}

Graph funnel(int n) {
  require(n >= 6 && n % 2 == 0, "funnel needs even n >= 6");
  const int m = (n - 2) / 2;
  const Vertex a2 = 2;
  const Vertex a3 = 2 + m;
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < m; ++i) {
    edges.push_back({1, a2 + i});
    for (int j = 0; j < m; ++j) edges.push_back({a2 + i, a3 + j});
  }
  return Graph::build(n, edges);
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed,
                       RandomConnectedInfo* info) {
  require(n >= 1, "random_connected needs n >= 1");
  require(edge_prob > 0.0 && edge_prob <= 1.0,
          "random_connected needs 0 < edge_prob <= 1");
  Rng rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<Edge> edges;
  RandomConnectedInfo local;
  bool connected = false;
  while (!connected && local.attempts < kRandomConnectedRetries) {
    ++local.attempts;
    edges.clear();
    DisjointSets sets(n);
    int components = n;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) {
          edges.push_back({u, v});
          if (sets.unite(u, v)) --components;
        }
      }
    }
    connected = components == 1;
  }
  if (!connected) {
    local.tree_overlay = true;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      Vertex u = order[i];
      Vertex v = order[pick(rng)];
      if (u > v) std::swap(u, v);
      if (std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end()) {
        edges.push_back({u, v});
      }
    }
  }
  if (info) *info = local;
  return Graph::build(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  return Graph::build(n, edges);
}

// ---------------------------------------------------------------------------
// Family specs

namespace {

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"path", "path"},
      {"cycle", "cycle"},
      {"complete", "complete"},
      {"complete_bipartite", "complete_bipartite"},
      {"bipartite", "complete_bipartite"},
      {"lollipop", "lollipop"},
      {"ladder_basement", "ladder_basement"},
      {"ladder", "ladder_basement"},
      {"projective_incidence", "projective_incidence"},
      {"projective", "projective_incidence"},
      {"heawood", "projective_incidence"},
      {"funnel", "funnel"},
      {"random_connected", "random_connected"},
      {"random", "random_connected"},
      {"random_tree", "random_tree"},
      {"tree", "random_tree"},
      {"petersen", "petersen"},
      {"hypercube", "hypercube"},
  };
  return table;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& positional() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> table{
      {"path", {"n"}},
      {"cycle", {"n"}},
      {"complete", {"n"}},
      {"complete_bipartite", {"a", "b"}},
      {"lollipop", {"n", "c"}},
      {"ladder_basement", {"n"}},
      {"projective_incidence", {"q"}},
      {"funnel", {"n"}},
      {"random_connected", {"n", "edge_prob", "seed"}},
      {"random_tree", {"n", "seed"}},
      {"petersen", {}},
      {"hypercube", {"n"}},
  };
  return table;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    try {
      std::size_t used = 0;
      value = static_cast<T>(std::stod(std::string(text), &used));
      if (used != text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw GeneratorError("bad value for " + std::string(key) + ": '" +
                           std::string(text) + "'");
    }
  } else {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw GeneratorError("bad value for " + std::string(key) + ": '" +
                           std::string(text) + "'");
    }
  }
  return value;
}

void assign(FamilySpec& spec, std::string_view key, std::string_view value) {
  if (key == "n") spec.n = parse_number<int>(key, value);
  else if (key == "a") spec.a = parse_number<int>(key, value);
  else if (key == "b") spec.b = parse_number<int>(key, value);
  else if (key == "q") spec.q = parse_number<int>(key, value);
  else if (key == "c") spec.c = parse_number<double>(key, value);
  else if (key == "edge_prob" || key == "p") spec.edge_prob = parse_number<double>(key, value);
  else if (key == "seed") spec.seed = parse_number<std::uint64_t>(key, value);
  else throw GeneratorError("unknown family parameter '" + std::string(key) + "'");
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  auto it = aliases().find(name);
  if (it == aliases().end()) {
    throw GeneratorError("unknown graph family '" + std::string(name) + "'");
  }
  FamilySpec spec;
  spec.family = it->second;
  if (name == "heawood") spec.q = 2;
  if (colon == std::string_view::npos) return spec;

  const auto& order = positional().at(spec.family);
  std::string_view rest = text.substr(colon + 1);
  std::size_t index = 0;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (token.empty()) continue;
    if (auto eq = token.find('='); eq != std::string_view::npos) {
      assign(spec, token.substr(0, eq), token.substr(eq + 1));
    } else {
      if (index >= order.size()) {
        throw GeneratorError("too many parameters for family " + spec.family);
      }
      assign(spec, order[index++], token);
    }
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << family << ':';
  const auto& order = positional().at(family);
  bool first = true;
  for (const auto& key : order) {
    if (!first) os << ',';
    first = false;
    os << key << '=';
    if (key == "n") os << n;
    else if (key == "a") os << a;
    else if (key == "b") os << b;
    else if (key == "q") os << q;
    else if (key == "c") os << format_double(c);
    else if (key == "edge_prob") os << format_double(edge_prob);
    else if (key == "seed") os << seed;
  }
  return os.str();
}

namespace {

Vertex farthest_from(const Graph& g, Vertex source) {
  const DistanceField field = bfs(g, source);
  return static_cast<Vertex>(
      std::max_element(field.dist.begin(), field.dist.end()) - field.dist.begin());
}

}  // namespace

FamilyInstance make_family(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "path") {
    return {path(spec.n), 0, spec.n - 1};
  }
  if (f == "complete_bipartite") {
    Graph g = complete_bipartite(spec.a, spec.b);
    return {std::move(g), 0, spec.a >= 2 ? 1 : spec.a};
  }
  if (f == "lollipop") {
    return {lollipop(spec.n, spec.c), spec.n - 1, 0};
  }
  if (f == "ladder_basement") {
    const LadderLayout lay = ladder_layout(spec.n);
    return {ladder_basement(spec.n), lay.cop_start, lay.drunk_start};
  }
  Graph g = [&] {
    if (f == "cycle") return cycle(spec.n);
    if (f == "complete") return complete(spec.n);
    if (f == "projective_incidence") return projective_incidence(spec.q);
    if (f == "funnel") return funnel(spec.n);
    if (f == "random_connected") return random_connected(spec.n, spec.edge_prob, spec.seed);
    if (f == "random_tree") return random_tree(spec.n, spec.seed);
    if (f == "petersen") return petersen();
    if (f == "hypercube") return hypercube(spec.n);
    throw GeneratorError("unknown graph family '" + f + "'");
  }();
  const Vertex far = farthest_from(g, 0);
  return {std::move(g), 0, far};
}

}  // namespace drunkcop
