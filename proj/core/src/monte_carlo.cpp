#include "drunkcop/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace drunkcop {

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int default_worker_count() {
  if (const char* env = std::getenv("DRUNKCOP_WORKERS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TrialOutcome> run_trials(const Graph& g, const PolicySpec& policy,
                                     const GameConfig& cfg, std::int64_t trials,
                                     std::uint64_t master_seed, int workers) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  cfg.validate(g);
  const PolicyFactory factory(g, policy);
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));

  auto play = [&](std::int64_t i) {
    const std::uint64_t seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
    Rng rng(seed);
    auto cop = factory.make();
    TrialOutcome out = play_game(g, *cop, cfg, rng);
    out.seed = seed;
    outcomes[static_cast<std::size_t>(i)] = std::move(out);
  };

  workers = static_cast<int>(std::clamp<std::int64_t>(workers, 1, trials));
  if (workers == 1) {
    for (std::int64_t i = 0; i < trials; ++i) play(i);
    return outcomes;
  }

  constexpr std::int64_t kBatch = 64;
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto body = [&] {
    try {
      for (;;) {
        const std::int64_t start = next.fetch_add(kBatch);
        if (start >= trials) return;
        const std::int64_t stop = std::min(trials, start + kBatch);
        for (std::int64_t i = start; i < stop; ++i) play(i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(trials);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

SimulationReport summarize(std::span<const TrialOutcome> outcomes,
                           std::uint64_t master_seed) {
  SimulationReport r;
  r.master_seed = master_seed;
  r.trials = static_cast<std::int64_t>(outcomes.size());
  if (outcomes.empty()) return r;

  r.min = r.max = outcomes.front().capture_time;
  double sum = 0.0;
  for (const TrialOutcome& o : outcomes) {
    sum += static_cast<double>(o.capture_time);
    r.min = std::min(r.min, o.capture_time);
    r.max = std::max(r.max, o.capture_time);
    r.truncated += o.truncated;
  }
  r.mean = sum / static_cast<double>(r.trials);
  double squares = 0.0;
  for (const TrialOutcome& o : outcomes) {
    const double dev = static_cast<double>(o.capture_time) - r.mean;
    squares += dev * dev;
  }
  if (r.trials > 1) {
    const double sd = std::sqrt(squares / static_cast<double>(r.trials - 1));
    r.std_error = sd / std::sqrt(static_cast<double>(r.trials));
  }

  const std::int64_t span = r.max - r.min + 1;
  r.histogram.lo = r.min;
  r.histogram.bucket_width = std::max<std::int64_t>(1, (span + kHistogramBuckets - 1) / kHistogramBuckets);
  r.histogram.counts.assign(
      static_cast<std::size_t>((span + r.histogram.bucket_width - 1) / r.histogram.bucket_width), 0);
  for (const TrialOutcome& o : outcomes) {
    ++r.histogram.counts[static_cast<std::size_t>((o.capture_time - r.min) / r.histogram.bucket_width)];
  }

  if (outcomes.front().stages) {
    std::array<double, 4> stage_sum{};
    double d1 = 0.0, d2 = 0.0;
    for (const TrialOutcome& o : outcomes) {
      if (!o.stages) continue;
      for (int s = 0; s < 4; ++s) stage_sum[s] += static_cast<double>(o.stages->stage_time[s]);
      if (auto v = o.stages->d1()) {
        d1 += *v;
        ++r.d1_samples;
      }
      if (auto v = o.stages->d2()) {
        d2 += *v;
        ++r.d2_samples;
      }
    }
    for (double& s : stage_sum) s /= static_cast<double>(r.trials);
    r.stage_means = stage_sum;
    if (r.d1_samples > 0) r.mean_d1 = d1 / static_cast<double>(r.d1_samples);
    if (r.d2_samples > 0) r.mean_d2 = d2 / static_cast<double>(r.d2_samples);
  }
  return r;
}

SimulationReport monte_carlo(const Graph& g, const PolicySpec& policy,
                             const GameConfig& cfg, std::int64_t trials,
                             std::uint64_t master_seed, int workers) {
  GameConfig quiet = cfg;
  quiet.record_trajectory = false;
  const auto outcomes = run_trials(g, policy, quiet, trials, master_seed, workers);
  return summarize(outcomes, master_seed);
}

}  // namespace drunkcop
