#include "drunkcop/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "drunkcop/generators.hpp"
#include "drunkcop/solvers.hpp"
#include "drunkcop/walks.hpp"

namespace drunkcop {
namespace {

bool edges_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const Edge& x, const Edge& y) {
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
      });
}

// Smaller margin first, then smaller graph, then edge list.
bool worse_than(const Counterexample& a, const Counterexample& b) {
  if (a.margin != b.margin) return a.margin < b.margin;
  if (a.n != b.n) return a.n < b.n;
  return edges_less(a.edges, b.edges);
}

LemmaReport start(std::string lemma, std::string domain) {
  LemmaReport r;
  r.lemma = std::move(lemma);
  r.domain = std::move(domain);
  r.worst_margin = std::numeric_limits<double>::infinity();
  return r;
}

template <typename Witness>
void observe(LemmaReport& r, const Graph& g, double margin, bool holds,
             Witness&& witness) {
  ++r.cases;
  r.worst_margin = std::min(r.worst_margin, margin);
  if (holds) return;
  r.pass = false;
  Counterexample cx{g.order(), g.edges(), {}, margin};
  if (!r.counterexample || worse_than(cx, *r.counterexample)) {
    cx.witness = witness();
    r.counterexample = std::move(cx);
  }
}

std::string describe(std::initializer_list<std::pair<const char*, double>> items) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [key, value] : items) {
    if (!first) os << ' ';
    first = false;
    os << key << '=' << value;
  }
  return os.str();
}

std::string graph_domain(const Graph& g) {
  return "graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count());
}

}  // namespace

void LemmaReport::absorb(const LemmaReport& other) {
  if (other.cases == 0) return;
  worst_margin = cases == 0 ? other.worst_margin : std::min(worst_margin, other.worst_margin);
  cases += other.cases;
  pass = pass && other.pass;
  if (other.counterexample &&
      (!counterexample || worse_than(*other.counterexample, *counterexample))) {
    counterexample = other.counterexample;
  }
}

double varopoulos_carne_bound(int deg_x, int deg_y, int distance, int t) {
  const double ratio = static_cast<double>(deg_y) / deg_x;
  const double d = distance;
  return std::sqrt(std::exp(1.0)) * std::sqrt(ratio) * std::exp(-d * d / (2.0 * t));
}

double keylemma_bound(int n, int t) {
  return 1.0 + std::sqrt(static_cast<double>(t)) * std::sqrt(1.0 + 5.0 * std::log(n));
}

double four_lemma_bound(int n) {
  return 1.0 / (4.0 * std::pow(static_cast<double>(n), 2.0 / 3.0));
}

double funnel_three_step_formula(int n) {
  const double p = 2.0 / n;
  return p + (1.0 - p) * p;
}

double expected_walk_distance(const Graph& g, Vertex x0, int t) {
  const DistanceDistribution dist = tstep_distribution(g, x0, t);
  double e = 0.0;
  for (Vertex y = 0; y < g.order(); ++y) e += dist.prob[y] * g.distance(x0, y);
  return e;
}

namespace {

// P(d(x0, x_t) < t)
double stall_prob(const Graph& g, Vertex x0, int t) {
  const DistanceDistribution dist = tstep_distribution(g, x0, t);
  double p = 0.0;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (g.distance(x0, y) < t) p += dist.prob[y];
  }
  return p;
}

}  // namespace

double four_step_prob(const Graph& g, Vertex x0) { return stall_prob(g, x0, 4); }
double three_step_prob(const Graph& g, Vertex x0) { return stall_prob(g, x0, 3); }

LemmaReport vc_bound_check(const Graph& g, int t_max) {
  if (t_max < 1) throw std::invalid_argument("vc check needs t_max >= 1");
  LemmaReport r = start("varopoulos-carne", graph_domain(g) + " t<=" + std::to_string(t_max));
  if (g.order() < 2) return r;
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<double> mass(g.order(), 0.0);
    mass[x] = 1.0;
    for (int t = 1; t <= t_max; ++t) {
      mass = walk_step(g, mass);
      for (Vertex y = 0; y < g.order(); ++y) {
        const int d = g.distance(x, y);
        const double bound = varopoulos_carne_bound(g.degree(x), g.degree(y), d, t);
        const double margin = bound - mass[y];
        observe(r, g, margin, mass[y] <= bound + kGuardBand, [&] {
          return describe({{"x", x}, {"y", y}, {"t", t}, {"p", mass[y]}, {"bound", bound}});
        });
      }
    }
  }
  return r;
}

LemmaReport expected_distance_check(const Graph& g, int t) {
  LemmaReport r = start("keylemma", graph_domain(g) + " t=" + std::to_string(t));
  if (g.order() < 2) return r;
  const double bound = keylemma_bound(g.order(), t);
  for (Vertex x = 0; x < g.order(); ++x) {
    const double e = expected_walk_distance(g, x, t);
    observe(r, g, bound - e, e < bound, [&] {
      return describe({{"x0", x}, {"t", t}, {"expected", e}, {"bound", bound}});
    });
  }
  return r;
}

LemmaReport keylemma_check(const Graph& g, int t_max) {
  LemmaReport r = start("keylemma", graph_domain(g) + " t<=" + std::to_string(t_max));
  if (g.order() < 2) return r;
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<double> mass(g.order(), 0.0);
    mass[x] = 1.0;
    for (int t = 1; t <= t_max; ++t) {
      mass = walk_step(g, mass);
      double e = 0.0;
      for (Vertex y = 0; y < g.order(); ++y) e += mass[y] * g.distance(x, y);
      const double bound = keylemma_bound(g.order(), t);
      observe(r, g, bound - e, e < bound, [&] {
        return describe({{"x0", x}, {"t", t}, {"expected", e}, {"bound", bound}});
      });
    }
  }
  return r;
}

LemmaReport four_lemma_check(const Graph& g) {
  LemmaReport r = start("four-lemma", graph_domain(g));
  if (g.order() < 2) return r;
  const double bound = four_lemma_bound(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    const double p = four_step_prob(g, x);
    observe(r, g, p - bound, p >= bound - kGuardBand, [&] {
      return describe({{"x0", x}, {"p", p}, {"bound", bound}});
    });
  }
  return r;
}

LemmaReport diam_delta_check(const Graph& g) {
  LemmaReport r = start("diam-delta", graph_domain(g));
  const int slack = g.order() + 1 - g.diameter() - g.max_degree();
  observe(r, g, slack, slack >= 0, [&] {
    return describe({{"diam", g.diameter()}, {"max_degree", g.max_degree()}});
  });
  return r;
}

LemmaReport regular_greedy_bound_check(const Graph& g) {
  const auto r_deg = g.regularity();
  if (!r_deg) throw std::invalid_argument("regular-bound check needs a regular graph");
  LemmaReport r = start("regular-bound", graph_domain(g) + " r=" + std::to_string(*r_deg));
  const ValueTable table = exact_expected_capture(g, PolicySpec::parse("greedy:lex"));
  const double worst = table.max_value();
  const double diam_bound = *r_deg * g.diameter() / 2.0;
  const double size_bound = 1.5 * g.order();
  const double margin = std::min(diam_bound - worst, size_bound - worst);
  observe(r, g, margin, worst <= diam_bound + kGuardBand && worst < size_bound, [&] {
    return describe({{"max_expected", worst}, {"r_diam_half", diam_bound}, {"three_n_half", size_bound}});
  });
  return r;
}

LemmaReport tree_bound_check(const Graph& tree) {
  if (tree.edge_count() + 1 != static_cast<std::size_t>(tree.order())) {
    throw std::invalid_argument("tree-bound check needs a tree");
  }
  LemmaReport r = start("tree-bound", graph_domain(tree));
  const ValueTable table = exact_expected_capture(tree, PolicySpec::parse("greedy:lex"));
  const double n = tree.order();
  for (Vertex c = 0; c < tree.order(); ++c) {
    for (Vertex d = 0; d < tree.order(); ++d) {
      const double v = table.at(c, d);
      observe(r, tree, n - v, v <= n + kGuardBand, [&] {
        return describe({{"cop", c}, {"drunk", d}, {"expected", v}});
      });
    }
  }
  return r;
}

LemmaReport exhaustive_check(const std::string& lemma, int n_min, int n_max,
                             int workers, const GraphCheck& check) {
  workers = std::max(1, workers);
  LemmaReport total = start(lemma, "all labeled connected graphs, " +
                                       std::to_string(n_min) + " <= n <= " +
                                       std::to_string(n_max));
  total.cases = 0;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<LemmaReport> partial(workers, start(lemma, ""));
    for (auto& p : partial) p.cases = 0;
    for_each_connected_graph_parallel(n, workers, [&](int w, const Graph& g) {
      partial[w].absorb(check(g));
    });
    for (const auto& p : partial) total.absorb(p);
  }
  return total;
}

LemmaReport four_lemma_check(int n_max, int workers) {
  return exhaustive_check("four-lemma", 2, n_max, workers,
                          [](const Graph& g) { return four_lemma_check(g); });
}

LemmaReport diam_delta_check(int n_max, int workers) {
  return exhaustive_check("diam-delta", 1, n_max, workers,
                          [](const Graph& g) { return diam_delta_check(g); });
}

LemmaReport three_step_check(std::span<const int> sizes) {
  std::string domain = "funnel n in {";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    domain += (i ? "," : "") + std::to_string(sizes[i]);
  }
  LemmaReport r = start("three-step", domain + "}");
  for (int n : sizes) {
    const Graph g = funnel(n);
    const double p = three_step_prob(g, 0);
    const double formula = funnel_three_step_formula(n);
    const double limit = 4.0 / n;
    const bool matches = std::abs(p - formula) <= kGuardBand;
    observe(r, g, limit - p, matches && p < limit, [&] {
      return describe({{"n", n}, {"p", p}, {"formula", formula}, {"four_over_n", limit}});
    });
  }
  return r;
}

}  // namespace drunkcop
