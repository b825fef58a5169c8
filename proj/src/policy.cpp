#include "e3d/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace e3d {

std::size_t QTable::offset(Action a, std::size_t slot) {
  if (slot >= kSequenceLength) throw std::out_of_range("slot outside 0..6");
  return index_of(a) * kSequenceLength + slot;
}

std::array<double, kActionCount> QTable::column(std::size_t slot) const {
  std::array<double, kActionCount> col{};
  for (std::size_t a = 0; a < kActionCount; ++a) col[a] = (*this)(action_at(a), slot);
  return col;
}

bool QTable::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

SlotDistribution slot_probs(const QTable& q, std::size_t slot, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("inverse temperature must be finite and nonnegative");
  }
  const auto col = q.column(slot);
  for (double v : col) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite action value in Q table");
  }

  const double top = *std::max_element(col.begin(), col.end());
  SlotDistribution probs{};
  double total = 0.0;
  for (std::size_t a = 0; a < kActionCount; ++a) {
    probs[a] = std::exp(beta * (col[a] - top));
    total += probs[a];
  }
  for (double& p : probs) p /= total;
  return probs;
}

namespace {

Action draw_from(const SlotDistribution& probs, double u) {
  double cumulative = 0.0;
  std::size_t last_supported = 0;
  for (std::size_t a = 0; a < kActionCount; ++a) {
    if (probs[a] <= 0.0) continue;
    cumulative += probs[a];
    last_supported = a;
    if (u < cumulative) return action_at(a);
  }
  // u landed in the rounding gap above the final cumulative sum.
  return action_at(last_supported);
}

}  // namespace

ActionSequence sample_sequence(const QTable& q, double beta, Rng& rng) {
  ActionSequence seq{};
  for (std::size_t i = 0; i < kSequenceLength; ++i) {
    seq[i] = draw_from(slot_probs(q, i, beta), rng.uniform());
  }
  return seq;
}

double seq_log_prob(const QTable& q, double beta, const ActionSequence& seq) {
  double total = 0.0;
  for (std::size_t i = 0; i < kSequenceLength; ++i) {
    total += std::log(slot_probs(q, i, beta)[index_of(seq[i])]);
  }
  return total;
}

ActionSequence egreedy_sample(const QTable& q, double epsilon, Rng& rng) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  ActionSequence seq{};
  for (std::size_t i = 0; i < kSequenceLength; ++i) {
    if (rng.uniform() < epsilon) {
      seq[i] = action_at(rng.below(kActionCount));
      continue;
    }
    const auto col = q.column(i);
    const double top = *std::max_element(col.begin(), col.end());
    std::array<std::size_t, kActionCount> best{};
    std::size_t n_best = 0;
    for (std::size_t a = 0; a < kActionCount; ++a) {
      if (col[a] == top) best[n_best++] = a;
    }
    seq[i] = action_at(n_best == 1 ? best[0] : best[rng.below(n_best)]);
  }
  return seq;
}

}  // namespace e3d
