#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drunkcop/graph.hpp"
#include "drunkcop/hitting.hpp"
#include "drunkcop/policies.hpp"

namespace drunkcop {

enum class SolverErrorKind { kNotMemoryless, kNoConvergence, kMissingAnchor };

class SolverError : public std::runtime_error {
 public:
  SolverError(SolverErrorKind kind, const std::string& what, double residual = 0.0)
      : std::runtime_error(what), kind_(kind), residual_(residual) {}
  SolverErrorKind kind() const noexcept { return kind_; }
  double residual() const noexcept { return residual_; }

 private:
  SolverErrorKind kind_;
  double residual_;
};

struct SolverOptions {
  double tolerance = 1e-10;
  std::int64_t max_sweeps = 1'000'000;
  bool cop_may_idle = false;
  // Anchor vertex of the oscillating cop (its start).
  std::optional<Vertex> oscillate_anchor;
};

// Expected remaining capture time, in moves, for every joint position with
// the cop about to move.
class ValueTable {
 public:
  ValueTable() = default;
  explicit ValueTable(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0.0) {}

  int order() const noexcept { return n_; }
  double at(Vertex cop, Vertex drunk) const {
    return values_[static_cast<std::size_t>(cop) * n_ + drunk];
  }
  double& at(Vertex cop, Vertex drunk) {
    return values_[static_cast<std::size_t>(cop) * n_ + drunk];
  }
  double max_value() const;

  std::int64_t iterations = 0;
  double residual = 0.0;  // largest change in the final sweep

  // "cop,drunk,value" header followed by one row per joint state. The reader
  // skips leading "#" comment lines.
  std::string to_csv() const;
  static ValueTable from_csv(std::string_view text);

 private:
  int n_ = 0;
  std::vector<double> values_;
};

// Gauss-Seidel sweeps (drunk-major, then cop) of
//   E(c,d) = sum_c' pi(c'|c,d) [1 if c' = d else
//            1 + mean over d' ~ d of (0 if d' = c' else E(c',d'))]
// from E = 0 until the largest update drops below the tolerance. Iterates
// increase monotonically, so every entry is a lower bound on the true value.
// Rejects policies that are not memoryless.
ValueTable exact_expected_capture(const Graph& g, const PolicySpec& policy,
                                  const SolverOptions& options = {});

// The same chain with the cop choosing the minimizing move at every state
// (value iteration from V = 0).
ValueTable optimal_capture_values(const Graph& g, const SolverOptions& options = {});

// Distribution of the cop's next vertex at (cop, drunk) for a memoryless
// policy. `table` is required for the hitting-time cop.
std::vector<std::pair<Vertex, double>> cop_move_distribution(
    const Graph& g, const PolicySpec& policy, Vertex cop, Vertex drunk,
    const SolverOptions& options, const HittingTimeTable* table);

}  // namespace drunkcop
