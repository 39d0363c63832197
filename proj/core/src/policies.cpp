#include "drunkcop/policies.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace drunkcop {

PolicySpec PolicySpec::parse(std::string_view text) {
  PolicySpec spec;
  if (text == "oscillate") {
    spec.kind = PolicyKind::kOscillate;
  } else if (text == "random") {
    spec.kind = PolicyKind::kRandom;
  } else if (text == "greedy" || text == "greedy:lex") {
    spec.kind = PolicyKind::kGreedy;
    spec.tie_break = GreedyTieBreak::kLex;
  } else if (text == "greedy:random") {
    spec.kind = PolicyKind::kGreedy;
    spec.tie_break = GreedyTieBreak::kRandom;
  } else if (text == "greedy:history") {
    spec.kind = PolicyKind::kGreedy;
    spec.tie_break = GreedyTieBreak::kHistory;
  } else if (text == "hitting") {
    spec.kind = PolicyKind::kHittingTime;
  } else if (text == "smart") {
    spec.kind = PolicyKind::kFourStage;
  } else if (text == "smart:strict") {
    spec.kind = PolicyKind::kFourStage;
    spec.early_exit = false;
  } else {
    throw PolicyError("unknown policy '" + std::string(text) + "'");
  }
  return spec;
}

std::string PolicySpec::to_string() const {
  switch (kind) {
    case PolicyKind::kOscillate: return "oscillate";
    case PolicyKind::kRandom: return "random";
    case PolicyKind::kHittingTime: return "hitting";
    case PolicyKind::kFourStage: return early_exit ? "smart" : "smart:strict";
    case PolicyKind::kGreedy:
      switch (tie_break) {
        case GreedyTieBreak::kLex: return "greedy:lex";
        case GreedyTieBreak::kRandom: return "greedy:random";
        case GreedyTieBreak::kHistory: return "greedy:history";
      }
  }
  return "?";
}

bool PolicySpec::memoryless() const {
  switch (kind) {
    case PolicyKind::kFourStage: return false;
    case PolicyKind::kGreedy: return tie_break != GreedyTieBreak::kHistory;
    default: return true;
  }
}

std::vector<Vertex> greedy_candidates(const Graph& g, Vertex cop, Vertex drunk) {
  int best = std::numeric_limits<int>::max();
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(cop)) {
    const int d = g.distance(w, drunk);
    if (d < best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(w);
  }
  return out;
}

Vertex greedy_decide(const Graph& g, Vertex cop, Vertex drunk,
                     GreedyTieBreak tie_break, Vertex drunk_prev, Rng* rng) {
  assert(cop != drunk);
  switch (tie_break) {
    case GreedyTieBreak::kLex:
      return geodesic_next(g, cop, drunk, TieBreak::kLex);
    case GreedyTieBreak::kRandom:
      return geodesic_next(g, cop, drunk, TieBreak::kRandom, rng);
    case GreedyTieBreak::kHistory: {
      if (drunk_prev < 0) return geodesic_next(g, cop, drunk, TieBreak::kLex);
      const int want = g.distance(cop, drunk) - 1;
      Vertex best = -1;
      int best_prev = std::numeric_limits<int>::max();
      for (Vertex w : g.neighbors(cop)) {
        if (g.distance(w, drunk) != want) continue;
        const int dp = g.distance(w, drunk_prev);
        if (dp < best_prev) {
          best_prev = dp;
          best = w;
        }
      }
      return best;
    }
  }
  return -1;
}

namespace {

// Relative slack so that hitting times equal up to solver round-off break
// ties by vertex id.
bool strictly_less(double a, double b) { return a < b - 1e-9 * (1.0 + std::abs(b)); }

}  // namespace

Vertex hitting_time_greedy_decide(const Graph& g, const HittingTimeTable& table,
                                  Vertex cop, Vertex drunk, bool may_idle) {
  assert(cop != drunk);
  Vertex best = -1;
  double best_time = std::numeric_limits<double>::infinity();
  for (Vertex w : g.neighbors(cop)) {
    if (w == drunk) return w;
    const double t = table(drunk, w);
    if (best < 0 || strictly_less(t, best_time)) {
      best = w;
      best_time = t;
    }
  }
  if (may_idle && strictly_less(table(drunk, cop), best_time)) return cop;
  return best;
}

Vertex oscillate_partner(const Graph& g, Vertex anchor) {
  return g.neighbors(anchor).front();
}

Vertex oscillate_decide(const Graph& g, Vertex anchor, Vertex cop) {
  const Vertex partner = oscillate_partner(g, anchor);
  if (cop == anchor) return partner;
  if (cop == partner) return anchor;
  return geodesic_next(g, cop, anchor, TieBreak::kLex);
}

Vertex random_decide(const Graph& g, Vertex cop, Rng& rng) {
  auto nb = g.neighbors(cop);
  std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
  return nb[pick(rng)];
}

namespace {

class OscillatePolicy final : public CopPolicy {
 public:
  Vertex decide(const DecisionContext& ctx, Rng&) override {
    return oscillate_decide(ctx.graph, ctx.cop_start, ctx.cop);
  }
};

class RandomPolicy final : public CopPolicy {
 public:
  Vertex decide(const DecisionContext& ctx, Rng& rng) override {
    return random_decide(ctx.graph, ctx.cop, rng);
  }
};

class GreedyPolicy final : public CopPolicy {
 public:
  explicit GreedyPolicy(GreedyTieBreak tie_break) : tie_break_(tie_break) {}
  Vertex decide(const DecisionContext& ctx, Rng& rng) override {
    return greedy_decide(ctx.graph, ctx.cop, ctx.drunk, tie_break_,
                         ctx.drunk_prev, &rng);
  }

 private:
  GreedyTieBreak tie_break_;
};

class HittingTimePolicy final : public CopPolicy {
 public:
  explicit HittingTimePolicy(std::shared_ptr<const HittingTimeTable> table)
      : table_(std::move(table)) {}
  Vertex decide(const DecisionContext& ctx, Rng&) override {
    return hitting_time_greedy_decide(ctx.graph, *table_, ctx.cop, ctx.drunk,
                                      ctx.may_idle);
  }

 private:
  std::shared_ptr<const HittingTimeTable> table_;
};

class FourStagePolicy final : public CopPolicy {
 public:
  explicit FourStagePolicy(bool early_exit) : early_exit_(early_exit) {}
  Vertex decide(const DecisionContext& ctx, Rng&) override {
    return four_stage_decide(ctx.graph, state_, ctx.cop, ctx.drunk,
                             ctx.drunk_start, early_exit_);
  }
  const FourStageState* four_stage() const override { return &state_; }

 private:
  bool early_exit_;
  FourStageState state_;
};

}  // namespace

PolicyFactory::PolicyFactory(const Graph& g, const PolicySpec& spec) : spec_(spec) {
  if (spec_.kind == PolicyKind::kHittingTime) {
    hitting_ = std::make_shared<const HittingTimeTable>(g);
  }
}

std::unique_ptr<CopPolicy> PolicyFactory::make() const {
  switch (spec_.kind) {
    case PolicyKind::kOscillate: return std::make_unique<OscillatePolicy>();
    case PolicyKind::kRandom: return std::make_unique<RandomPolicy>();
    case PolicyKind::kGreedy: return std::make_unique<GreedyPolicy>(spec_.tie_break);
    case PolicyKind::kHittingTime: return std::make_unique<HittingTimePolicy>(hitting_);
    case PolicyKind::kFourStage: return std::make_unique<FourStagePolicy>(spec_.early_exit);
  }
  return nullptr;
}

}  // namespace drunkcop
