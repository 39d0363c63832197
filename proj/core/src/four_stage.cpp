#include <cassert>

#include "drunkcop/policies.hpp"

namespace drunkcop {
namespace {

void finish_stage(FourStageState& state, int distance) {
  if (state.stage <= 2) state.end_distance[state.stage - 1] = distance;
}

}  // namespace

Vertex four_stage_decide(const Graph& g, FourStageState& state, Vertex cop,
                         Vertex drunk, Vertex drunk_start, bool early_exit) {
  assert(cop != drunk);
  const int d = g.distance(cop, drunk);

  if (state.stage == 1 && state.target < 0) state.target = drunk_start;
  if (state.stage == 1 && cop == state.target) {
    finish_stage(state, d);
    state.stage = 2;
    state.target = drunk;
  }
  if (state.stage == 2 && cop == state.target) {
    finish_stage(state, d);
    state.stage = 3;
    state.block_step = 0;
  }
  if (early_exit && state.stage < 4 && d <= 3) {
    finish_stage(state, d);
    state.early_exit_from = state.stage;
    state.stage = 4;
  }
  if (state.stage == 3 && state.block_step == 0) {
    if (d < 4) {
      state.stage = 4;
    } else {
      state.target = drunk;
    }
  }

  ++state.stage_time[state.stage - 1];
  switch (state.stage) {
    case 1:
    case 2:
      return geodesic_next(g, cop, state.target, TieBreak::kLex);
    case 3: {
      const Vertex next = geodesic_next(g, cop, state.target, TieBreak::kLex);
      state.block_step = (state.block_step + 1) % 4;
      return next;
    }
    default:
      return greedy_decide(g, cop, drunk, GreedyTieBreak::kLex);
  }
}

}  // namespace drunkcop
