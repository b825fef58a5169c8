#pragma once

#include <span>

#include "e3d/types.hpp"

namespace e3d {

/// Two 3x3 rooms side by side. Room A holds columns 0-2, room B columns 3-5.
/// The only crossing is the door between (door_row, 2) and (door_row, 3).
/// Blocked moves leave the agent in place.
struct TwoRoomWorld {
  int height = kGridHeight;
  int width = kGridWidth;
  int wall_col = 3;  // first column of room B
  int door_row = 1;
  StateId start{0};
  StateId goal{17};

  StateId step(StateId state, Action action) const noexcept;

  /// Folds step over the sequence from start; only the end state is returned.
  StateId rollout(const ActionSequence& seq) const noexcept;

  /// 1 at the goal cell, 0 elsewhere.
  int reward(StateId state) const noexcept { return state == goal ? 1 : 0; }

  bool in_room_a(StateId state) const noexcept { return state.col() < wall_col; }
};

/// Exact final-state distribution of the factorized policy whose slot i draws
/// its move from slot_probs[i]. Propagates state occupancy through the seven
/// deterministic steps, which matches enumerating all 4^7 sequences.
/// Throws std::invalid_argument unless there are 7 valid slot simplices.
EffectDistribution exact_final_distribution(const TwoRoomWorld& world,
                                            std::span<const SlotDistribution> slot_probs);

/// Shortcut for the uniform factorized policy.
EffectDistribution exact_uniform_final_distribution(const TwoRoomWorld& world);

}  // namespace e3d
