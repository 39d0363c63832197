#include "drunkcop/game.hpp"

#include <ostream>
#include <string>

namespace drunkcop {

void GameConfig::validate(const Graph& g) const {
  if (!g.contains(cop_start)) {
    throw std::invalid_argument("cop start " + std::to_string(cop_start) + " out of range");
  }
  if (!g.contains(drunk_start)) {
    throw std::invalid_argument("drunk start " + std::to_string(drunk_start) +
                                " out of range");
  }
  if (move_cap < 1) throw std::invalid_argument("move cap must be at least 1");
}

TrialOutcome play_game(const Graph& g, CopPolicy& policy, const GameConfig& cfg,
                       Rng& rng) {
  cfg.validate(g);
  TrialOutcome out;
  GameState state{0, cfg.cop_start, cfg.drunk_start, cfg.cop_start == cfg.drunk_start};
  Vertex drunk_prev = -1;
  if (cfg.record_trajectory) out.trajectory.emplace_back(state.cop, state.drunk);

  while (!state.captured) {
    if (state.move_count == cfg.move_cap) {
      out.truncated = true;
      break;
    }
    ++state.move_count;
    const DecisionContext ctx{g,
                              state.cop,
                              state.drunk,
                              drunk_prev,
                              cfg.cop_start,
                              cfg.drunk_start,
                              state.move_count,
                              cfg.cop_may_idle};
    const Vertex next = policy.decide(ctx, rng);
    const bool legal = (g.contains(next) && g.has_edge(state.cop, next)) ||
                       (cfg.cop_may_idle && next == state.cop);
    if (!legal) {
      throw PolicyFault("policy moved the cop from " + std::to_string(state.cop) +
                        " to non-neighbor " + std::to_string(next));
    }
    state.cop = next;
    if (state.cop != state.drunk) {
      auto nb = g.neighbors(state.drunk);
      std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
      drunk_prev = state.drunk;
      state.drunk = nb[pick(rng)];
    }
    state.captured = state.cop == state.drunk;
    if (cfg.record_trajectory) out.trajectory.emplace_back(state.cop, state.drunk);
  }

  out.capture_time = state.move_count;
  if (const FourStageState* fs = policy.four_stage()) out.stages = *fs;
  return out;
}

void write_trajectory(std::ostream& out, const TrialOutcome& outcome) {
  for (std::size_t i = 0; i < outcome.trajectory.size(); ++i) {
    out << i << ' ' << outcome.trajectory[i].first << ' '
        << outcome.trajectory[i].second << '\n';
  }
}

}  // namespace drunkcop
