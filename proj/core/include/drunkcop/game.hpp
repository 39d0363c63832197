#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "drunkcop/graph.hpp"
#include "drunkcop/policies.hpp"

namespace drunkcop {

inline constexpr std::int64_t kDefaultMoveCap = 10'000'000;

struct GameConfig {
  Vertex cop_start = 0;
  Vertex drunk_start = 0;
  bool cop_may_idle = false;
  std::int64_t move_cap = kDefaultMoveCap;
  bool record_trajectory = false;

  // Throws std::invalid_argument on out-of-range starts or move_cap < 1.
  void validate(const Graph& g) const;
};

struct GameState {
  std::int64_t move_count = 0;
  Vertex cop = 0;
  Vertex drunk = 0;
  bool captured = false;
};

// Raised when a policy proposes a vertex that is not a legal cop move.
class PolicyFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TrialOutcome {
  std::int64_t capture_time = 0;  // move cap when truncated
  bool truncated = false;
  std::uint64_t seed = 0;
  // (cop, drunk) before the first move and after every move; filled only
  // when GameConfig::record_trajectory is set.
  std::vector<std::pair<Vertex, Vertex>> trajectory;
  std::optional<FourStageState> stages;
};

// Plays one game. A move is a cop step followed, unless she landed on the
// drunk, by a uniform drunk step; capture time is the index of the move on
// which the two first share a vertex.
TrialOutcome play_game(const Graph& g, CopPolicy& policy, const GameConfig& cfg,
                       Rng& rng);

// "move_index cop_vertex drunk_vertex" per line, starting at move 0.
void write_trajectory(std::ostream& out, const TrialOutcome& outcome);

}  // namespace drunkcop
