#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drunkcop/graph.hpp"
#include "drunkcop/hitting.hpp"

namespace drunkcop {

enum class PolicyKind { kOscillate, kRandom, kGreedy, kHittingTime, kFourStage };
enum class GreedyTieBreak { kLex, kRandom, kHistory };

class PolicyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parsed form of the policy strings "oscillate", "random", "greedy:lex",
// "greedy:random", "greedy:history", "hitting", "smart" and "smart:strict"
// (the four-stage cop without the early exit to the endgame).
struct PolicySpec {
  PolicyKind kind = PolicyKind::kGreedy;
  GreedyTieBreak tie_break = GreedyTieBreak::kLex;
  bool early_exit = true;

  static PolicySpec parse(std::string_view text);
  std::string to_string() const;

  // True when the decision depends only on the current (cop, drunk) pair,
  // so the game is a Markov chain on joint positions.
  bool memoryless() const;
};

// Neighbors of `cop` at minimum distance to `drunk`, ascending.
std::vector<Vertex> greedy_candidates(const Graph& g, Vertex cop, Vertex drunk);

// Moves to a neighbor minimizing distance to the drunk. A geodesic neighbor
// always beats standing still, so idling never arises here. `drunk_prev` is
// the drunk's previous vertex (-1 if none) and only matters for kHistory;
// `rng` only for kRandom.
Vertex greedy_decide(const Graph& g, Vertex cop, Vertex drunk,
                     GreedyTieBreak tie_break, Vertex drunk_prev = -1,
                     Rng* rng = nullptr);

// Moves to the neighbor with the smallest expected hitting time from the
// drunk (ties to the smaller id). With `may_idle` the current vertex is taken
// only when strictly better.
Vertex hitting_time_greedy_decide(const Graph& g, const HittingTimeTable& table,
                                  Vertex cop, Vertex drunk, bool may_idle = false);

// Positional oscillation on the edge anchor -- partner, partner being the
// anchor's smallest neighbor. Off that edge the cop walks back to the anchor.
Vertex oscillate_partner(const Graph& g, Vertex anchor);
Vertex oscillate_decide(const Graph& g, Vertex anchor, Vertex cop);

Vertex random_decide(const Graph& g, Vertex cop, Rng& rng);

// Internal state and telemetry of the four-stage cop.
struct FourStageState {
  int stage = 1;                    // 1..4, never decreases
  Vertex target = -1;               // current travel target in stages 1-3
  int block_step = 0;               // position inside a stage-3 block, 0..3
  std::array<std::int64_t, 4> stage_time{};  // moves decided in each stage
  std::optional<int> end_distance[2];        // D_1, D_2 when those stages ended
  int early_exit_from = 0;          // stage left by the d <= 3 shortcut, 0 if none

  std::optional<int> d1() const { return end_distance[0]; }
  std::optional<int> d2() const { return end_distance[1]; }
};

// One cop turn of the four-stage strategy. Transitions are evaluated at the
// start of the turn, then the move is charged to the resulting stage.
//   1: walk a lex geodesic to the drunk's start vertex.
//   2: walk to where the drunk stood when stage 1 ended.
//   3: at each block start, stop if d < 4, else freeze the drunk's vertex as
//      the target for four geodesic steps.
//   4: greedy with lex ties.
// With `early_exit` any turn in stages 1-3 at distance <= 3 jumps to stage 4.
Vertex four_stage_decide(const Graph& g, FourStageState& state, Vertex cop,
                         Vertex drunk, Vertex drunk_start, bool early_exit = true);

struct DecisionContext {
  const Graph& graph;
  Vertex cop;
  Vertex drunk;
  Vertex drunk_prev;  // -1 before the drunk's first step
  Vertex cop_start;
  Vertex drunk_start;
  std::int64_t move;  // 1-based index of the move being played
  bool may_idle;
};

class CopPolicy {
 public:
  virtual ~CopPolicy() = default;
  virtual Vertex decide(const DecisionContext& ctx, Rng& rng) = 0;
  virtual const FourStageState* four_stage() const { return nullptr; }
};

// Creates fresh per-trial policies. Shared read-only data (the hitting-time
// table) is built once and reused by every policy the factory makes.
class PolicyFactory {
 public:
  PolicyFactory(const Graph& g, const PolicySpec& spec);

  std::unique_ptr<CopPolicy> make() const;
  const PolicySpec& spec() const noexcept { return spec_; }
  const HittingTimeTable* hitting_table() const noexcept { return hitting_.get(); }

 private:
  PolicySpec spec_;
  std::shared_ptr<const HittingTimeTable> hitting_;
};

}  // namespace drunkcop
