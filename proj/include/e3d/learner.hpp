#pragma once

#include <cstdint>
#include <string_view>

#include "e3d/gridworld.hpp"
#include "e3d/policy.hpp"
#include "e3d/rng.hpp"
#include "e3d/types.hpp"

namespace e3d {

enum class Algorithm { e3d, uniform, egreedy };

std::string_view to_string(Algorithm algo) noexcept;
/// Throws std::invalid_argument for unknown names.
Algorithm parse_algorithm(std::string_view name);

/// Hyperparameters of the end-effect update.
struct E3DParams {
  double alpha = 0.3;   // policy learning rate
  double beta = 1.0;    // inverse temperature
  double lambda = 0.03; // reward precision
  double eta = 0.01;    // effect-model rate

  /// Throws std::invalid_argument when a value is out of range or alpha*lambda > 1.
  void validate() const;
};

struct TrialRecord {
  std::uint32_t session = 0;
  std::uint64_t trial = 0;  // 1-based within the session
  ActionSequence sequence{};
  StateId final_state{};
  int extrinsic_reward = 0;
  double intrinsic_drive = 0.0;  // -(1/beta) * log_ratio after the effect-model update

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// lambda * (q_value - sum_reward) + (1/beta) * log_ratio(p, target, state).
/// Throws std::invalid_argument when beta <= 0.
double variational_td(double q_value, double sum_reward, const EffectDistribution& p,
                      const EffectDistribution& target, StateId state, double lambda,
                      double beta);

/// For each slot i the entry (seq[i], i) becomes
///   (1 - alpha*lambda) Q + alpha*lambda*r - (alpha/beta) log_ratio(p, target, final_state).
/// p must already include this trial's observation.
QTable e3d_update(QTable q, const ActionSequence& seq, StateId final_state, int r,
                  const EffectDistribution& p, const EffectDistribution& target,
                  const E3DParams& params);

/// Baseline: Q(seq[i], i) += alpha * (r - Q(seq[i], i)) for every slot.
QTable egreedy_update(QTable q, const ActionSequence& seq, int r, double alpha);

/// Learner state that one trial reads and replaces.
struct LearnerState {
  QTable q;
  EffectDistribution p;
  EffectDistribution target;
};

struct TrialContext {
  Algorithm algo = Algorithm::e3d;
  E3DParams params;
  double epsilon = 0.1;
  bool rewarded = true;  // false: the environment withholds reward (r = 0 everywhere)
  std::uint32_t session = 0;
  std::uint64_t trial = 1;
};

struct TrialOutcome {
  LearnerState state;
  TrialRecord record;
};

/// Samples a sequence, rolls it out and applies the algorithm's update.
///  - e3d: softmax sampling, effect model then Q update.
///  - uniform: uniform sampling; the effect model is tracked for reporting, Q never changes.
///  - egreedy: epsilon-greedy sampling and update; the effect model is left untouched.
TrialOutcome run_trial(const TwoRoomWorld& world, const LearnerState& state,
                       const TrialContext& ctx, Rng& rng);

}  // namespace e3d
