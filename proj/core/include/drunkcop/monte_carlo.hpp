#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drunkcop/game.hpp"
#include "drunkcop/graph.hpp"
#include "drunkcop/policies.hpp"

namespace drunkcop {

// splitmix64 of (master, index); trial i always plays with Rng(derive_seed(master, i)).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index);

// DRUNKCOP_WORKERS if set and positive, else the hardware concurrency.
int default_worker_count();

struct Histogram {
  std::int64_t lo = 0;
  std::int64_t bucket_width = 1;
  std::vector<std::int64_t> counts;
};

inline constexpr int kHistogramBuckets = 20;

struct SimulationReport {
  std::int64_t trials = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  std::int64_t min = 0;
  std::int64_t max = 0;
  Histogram histogram;
  std::int64_t truncated = 0;
  std::uint64_t master_seed = 0;

  // Four-stage telemetry, averaged over trials.
  std::optional<std::array<double, 4>> stage_means;
  std::optional<double> mean_d1;  // over trials where stage 1 ended
  std::optional<double> mean_d2;
  std::int64_t d1_samples = 0;
  std::int64_t d2_samples = 0;
};

// Runs trials in parallel; outcome i is stored at index i regardless of
// which worker played it.
std::vector<TrialOutcome> run_trials(const Graph& g, const PolicySpec& policy,
                                     const GameConfig& cfg, std::int64_t trials,
                                     std::uint64_t master_seed, int workers);

// Aggregates in trial order, so the report depends only on the outcomes.
SimulationReport summarize(std::span<const TrialOutcome> outcomes,
                           std::uint64_t master_seed);

SimulationReport monte_carlo(const Graph& g, const PolicySpec& policy,
                             const GameConfig& cfg, std::int64_t trials,
                             std::uint64_t master_seed, int workers);

std::string report_to_json(const SimulationReport& report);
SimulationReport report_from_json(std::string_view text);

}  // namespace drunkcop
