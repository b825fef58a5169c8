#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "e3d/learner.hpp"
#include "e3d/types.hpp"

namespace e3d {

// Distribution metrics, all in nats. Inputs are probability vectors of equal length.

/// -sum p ln p, with 0 ln 0 = 0.
double entropy(std::span<const double> p);

/// sum p (ln p - ln q); q is floored at kProbabilityFloor, terms with p = 0 vanish.
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// Half the L1 distance.
double total_variation(std::span<const double> p, std::span<const double> q);

inline double entropy(const EffectDistribution& p) { return entropy(p.probs()); }
inline double kl_divergence(const EffectDistribution& p, const EffectDistribution& q) {
  return kl_divergence(p.probs(), q.probs());
}
inline double total_variation(const EffectDistribution& p, const EffectDistribution& q) {
  return total_variation(p.probs(), q.probs());
}

/// Running sum of extrinsic rewards, in record order.
std::vector<std::uint64_t> cumulative_rewards(std::span<const TrialRecord> records);

/// Trial number of the first rewarded record, if any.
std::optional<std::uint64_t> first_success_trial(std::span<const TrialRecord> records);

/// Final-state visit counts.
std::array<std::uint64_t, kStateCount> visit_counts(std::span<const TrialRecord> records);

/// Median of a nonempty sample; the mean of the two middle values for even sizes.
double median(std::vector<double> values);

}  // namespace e3d
