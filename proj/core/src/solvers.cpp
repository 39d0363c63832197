#include "drunkcop/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <sstream>

namespace drunkcop {

double ValueTable::max_value() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

std::string ValueTable::to_csv() const {
  std::string out = "cop,drunk,value\n";
  char line[96];
  for (Vertex c = 0; c < n_; ++c) {
    for (Vertex d = 0; d < n_; ++d) {
      std::snprintf(line, sizeof line, "%d,%d,%.17g\n", c, d, at(c, d));
      out += line;
    }
  }
  return out;
}

ValueTable ValueTable::from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line) && (line.empty() || line[0] == '#')) {
  }
  if (line.rfind("cop,drunk,value", 0) != 0) {
    throw std::invalid_argument("value table CSV must start with 'cop,drunk,value'");
  }
  std::vector<std::tuple<int, int, double>> rows;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int c = 0, d = 0;
    double v = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf", &c, &d, &v) != 3 || c < 0 || d < 0) {
      throw std::invalid_argument("bad value table row: " + line);
    }
    rows.emplace_back(c, d, v);
    n = std::max({n, c + 1, d + 1});
  }
  if (rows.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("value table CSV is not a full n x n table");
  }
  ValueTable table(n);
  for (auto [c, d, v] : rows) table.at(c, d) = v;
  return table;
}

std::vector<std::pair<Vertex, double>> cop_move_distribution(
    const Graph& g, const PolicySpec& policy, Vertex cop, Vertex drunk,
    const SolverOptions& options, const HittingTimeTable* table) {
  switch (policy.kind) {
    case PolicyKind::kGreedy:
      if (policy.tie_break == GreedyTieBreak::kLex) {
        return {{greedy_decide(g, cop, drunk, GreedyTieBreak::kLex), 1.0}};
      }
      if (policy.tie_break == GreedyTieBreak::kRandom) {
        const auto candidates = greedy_candidates(g, cop, drunk);
        const double p = 1.0 / static_cast<double>(candidates.size());
        std::vector<std::pair<Vertex, double>> out;
        for (Vertex w : candidates) out.emplace_back(w, p);
        return out;
      }
      break;
    case PolicyKind::kRandom: {
      const double p = 1.0 / g.degree(cop);
      std::vector<std::pair<Vertex, double>> out;
      for (Vertex w : g.neighbors(cop)) out.emplace_back(w, p);
      return out;
    }
    case PolicyKind::kOscillate:
      if (!options.oscillate_anchor) {
        throw SolverError(SolverErrorKind::kMissingAnchor,
                          "oscillate needs the cop's start vertex as anchor");
      }
      return {{oscillate_decide(g, *options.oscillate_anchor, cop), 1.0}};
    case PolicyKind::kHittingTime:
      if (table == nullptr) throw std::invalid_argument("hitting-time cop needs a table");
      return {{hitting_time_greedy_decide(g, *table, cop, drunk, options.cop_may_idle), 1.0}};
    case PolicyKind::kFourStage:
      break;
  }
  throw SolverError(SolverErrorKind::kNotMemoryless,
                    "policy '" + policy.to_string() + "' is not memoryless");
}

namespace {

// Expected remaining time after the cop moves to `next` with the drunk at
// `drunk` (the bracket in the recurrences).
inline double after_cop_move(const Graph& g, const ValueTable& table, Vertex next,
                             Vertex drunk) {
  if (next == drunk) return 1.0;
  double sum = 0.0;
  for (Vertex w : g.neighbors(drunk)) {
    if (w != next) sum += table.at(next, w);
  }
  return 1.0 + sum / g.degree(drunk);
}

[[noreturn]] void no_convergence(const char* what, std::int64_t sweeps, double residual) {
  std::ostringstream os;
  os << what << " did not converge after " << sweeps << " sweeps (residual "
     << residual << ")";
  throw SolverError(SolverErrorKind::kNoConvergence, os.str(), residual);
}

}  // namespace

ValueTable exact_expected_capture(const Graph& g, const PolicySpec& policy,
                                  const SolverOptions& options) {
  if (!policy.memoryless()) {
    throw SolverError(SolverErrorKind::kNotMemoryless,
                      "policy '" + policy.to_string() + "' is not memoryless");
  }
  const int n = g.order();
  std::unique_ptr<HittingTimeTable> hitting;
  if (policy.kind == PolicyKind::kHittingTime) hitting = std::make_unique<HittingTimeTable>(g);

  // moves for state (c, d) live in [offset[d*n+c], offset[d*n+c+1])
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) * n + 1, 0);
  std::vector<std::pair<Vertex, double>> moves;
  for (Vertex d = 0; d < n; ++d) {
    for (Vertex c = 0; c < n; ++c) {
      const std::size_t s = static_cast<std::size_t>(d) * n + c;
      if (c != d) {
        auto dist = cop_move_distribution(g, policy, c, d, options, hitting.get());
        moves.insert(moves.end(), dist.begin(), dist.end());
      }
      offset[s + 1] = moves.size();
    }
  }

  ValueTable table(n);
  for (std::int64_t sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    double change = 0.0;
    for (Vertex d = 0; d < n; ++d) {
      for (Vertex c = 0; c < n; ++c) {
        if (c == d) continue;
        const std::size_t s = static_cast<std::size_t>(d) * n + c;
        double value = 0.0;
        for (std::size_t k = offset[s]; k < offset[s + 1]; ++k) {
          value += moves[k].second * after_cop_move(g, table, moves[k].first, d);
        }
        change = std::max(change, std::abs(value - table.at(c, d)));
        table.at(c, d) = value;
      }
    }
    table.iterations = sweep;
    table.residual = change;
    if (change < options.tolerance) return table;
  }
  no_convergence("expected capture sweep", options.max_sweeps, table.residual);
}

ValueTable optimal_capture_values(const Graph& g, const SolverOptions& options) {
  const int n = g.order();
  ValueTable table(n);
  for (std::int64_t sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    double change = 0.0;
    for (Vertex d = 0; d < n; ++d) {
      for (Vertex c = 0; c < n; ++c) {
        if (c == d) continue;
        double best = options.cop_may_idle ? after_cop_move(g, table, c, d)
                                           : std::numeric_limits<double>::infinity();
        for (Vertex next : g.neighbors(c)) {
          best = std::min(best, after_cop_move(g, table, next, d));
        }
        change = std::max(change, std::abs(best - table.at(c, d)));
        table.at(c, d) = best;
      }
    }
    table.iterations = sweep;
    table.residual = change;
    if (change < options.tolerance) return table;
  }
  no_convergence("optimal value iteration", options.max_sweeps, table.residual);
}

}  // namespace drunkcop
