#include "e3d/gridworld.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace e3d {

StateId TwoRoomWorld::step(StateId state, Action action) const noexcept {
  int row = state.row();
  int col = state.col();
  int next_row = row;
  int next_col = col;
  switch (action) {
    case Action::E: ++next_col; break;
    case Action::S: ++next_row; break;
    case Action::W: --next_col; break;
    case Action::N: --next_row; break;
  }
  if (next_row < 0 || next_row >= height || next_col < 0 || next_col >= width) return state;

  // Horizontal moves across the room boundary only pass through the door.
  const bool crosses = (col < wall_col) != (next_col < wall_col);
  if (crosses && row != door_row) return state;

  return StateId(next_row * width + next_col);
}

StateId TwoRoomWorld::rollout(const ActionSequence& seq) const noexcept {
  StateId s = start;
  for (Action a : seq) s = step(s, a);
  return s;
}

EffectDistribution exact_final_distribution(const TwoRoomWorld& world,
                                            std::span<const SlotDistribution> slot_probs) {
  if (slot_probs.size() != kSequenceLength) {
    throw std::invalid_argument("expected 7 slot distributions, got " +
                                std::to_string(slot_probs.size()));
  }
  for (const auto& slot : slot_probs) {
    double sum = 0.0;
    for (double v : slot) {
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("slot probabilities must be finite and nonnegative");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("slot probabilities must sum to 1");
    }
  }

  std::array<double, kStateCount> occupancy{};
  occupancy[world.start.index()] = 1.0;
  for (const auto& slot : slot_probs) {
    std::array<double, kStateCount> next{};
    for (std::size_t s = 0; s < kStateCount; ++s) {
      if (occupancy[s] == 0.0) continue;
      for (std::size_t a = 0; a < kActionCount; ++a) {
        const StateId to = world.step(StateId(static_cast<int>(s)), action_at(a));
        next[to.index()] += occupancy[s] * slot[a];
      }
    }
    occupancy = next;
  }
  return EffectDistribution::from_probs(occupancy);
}

EffectDistribution exact_uniform_final_distribution(const TwoRoomWorld& world) {
  std::array<SlotDistribution, kSequenceLength> slots;
  slots.fill({0.25, 0.25, 0.25, 0.25});
  return exact_final_distribution(world, slots);
}

}  // namespace e3d
