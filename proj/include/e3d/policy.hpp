#pragma once

#include <array>
#include <cstddef>

#include "e3d/rng.hpp"
#include "e3d/types.hpp"

namespace e3d {

/// Per-slot action values, 4 actions x 7 slots, zero-initialized.
class QTable {
 public:
  double operator()(Action a, std::size_t slot) const { return values_[offset(a, slot)]; }
  double& operator()(Action a, std::size_t slot) { return values_[offset(a, slot)]; }

  std::array<double, kActionCount> column(std::size_t slot) const;
  bool all_finite() const noexcept;

  /// Action-major flat view: entry (a, i) at a * 7 + i.
  const std::array<double, kActionCount * kSequenceLength>& values() const noexcept {
    return values_;
  }

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  static std::size_t offset(Action a, std::size_t slot);
  std::array<double, kActionCount * kSequenceLength> values_{};
};

/// Softmax of beta * Q(., slot). Max-subtracted before exponentiation.
/// Throws std::invalid_argument for a non-finite column, negative or
/// non-finite beta, or slot outside 0..6.
SlotDistribution slot_probs(const QTable& q, std::size_t slot, double beta);

/// Draws each of the 7 moves independently from its slot distribution.
/// Consumes exactly one draw per slot.
ActionSequence sample_sequence(const QTable& q, double beta, Rng& rng);

/// Sum over slots of log slot_probs(slot)[seq[slot]].
double seq_log_prob(const QTable& q, double beta, const ActionSequence& seq);

/// Per slot: with probability epsilon a uniform action, otherwise the argmax
/// of the slot column with ties broken uniformly at random.
ActionSequence egreedy_sample(const QTable& q, double epsilon, Rng& rng);

}  // namespace e3d
