#include "e3d/learner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "e3d/effect_model.hpp"

namespace e3d {

std::string_view to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::e3d: return "e3d";
    case Algorithm::uniform: return "uniform";
    case Algorithm::egreedy: return "egreedy";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "e3d") return Algorithm::e3d;
  if (name == "uniform") return Algorithm::uniform;
  if (name == "egreedy") return Algorithm::egreedy;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected e3d, uniform or egreedy)");
}

void E3DParams::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!(std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  if (!(finite_nonneg(beta) && beta > 0.0)) {
    throw std::invalid_argument("beta must be finite and strictly positive");
  }
  if (!finite_nonneg(lambda)) throw std::invalid_argument("lambda must be finite and nonnegative");
  if (!(finite_nonneg(eta) && eta <= 1.0)) throw std::invalid_argument("eta must lie in [0, 1]");
  if (alpha * lambda > 1.0) throw std::invalid_argument("alpha * lambda must not exceed 1");
}

double variational_td(double q_value, double sum_reward, const EffectDistribution& p,
                      const EffectDistribution& target, StateId state, double lambda,
                      double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("variational TD needs beta > 0");
  return lambda * (q_value - sum_reward) + log_ratio(p, target, state) / beta;
}

QTable e3d_update(QTable q, const ActionSequence& seq, StateId final_state, int r,
                  const EffectDistribution& p, const EffectDistribution& target,
                  const E3DParams& params) {
  if (!(params.beta > 0.0)) throw std::invalid_argument("e3d update needs beta > 0");
  const double decay = 1.0 - params.alpha * params.lambda;
  const double reward_term = params.alpha * params.lambda * static_cast<double>(r);
  const double drive_term = params.alpha / params.beta * log_ratio(p, target, final_state);
  for (std::size_t i = 0; i < kSequenceLength; ++i) {
    double& entry = q(seq[i], i);
    entry = decay * entry + reward_term - drive_term;
  }
  return q;
}

QTable egreedy_update(QTable q, const ActionSequence& seq, int r, double alpha) {
  for (std::size_t i = 0; i < kSequenceLength; ++i) {
    double& entry = q(seq[i], i);
    entry += alpha * (static_cast<double>(r) - entry);
  }
  return q;
}

TrialOutcome run_trial(const TwoRoomWorld& world, const LearnerState& state,
                       const TrialContext& ctx, Rng& rng) {
  TrialOutcome out{state, {}};
  ActionSequence seq{};
  switch (ctx.algo) {
    case Algorithm::e3d: seq = sample_sequence(state.q, ctx.params.beta, rng); break;
    case Algorithm::uniform: seq = sample_sequence(state.q, 0.0, rng); break;
    case Algorithm::egreedy: seq = egreedy_sample(state.q, ctx.epsilon, rng); break;
  }

  const StateId final_state = world.rollout(seq);
  const int r = ctx.rewarded ? world.reward(final_state) : 0;

  switch (ctx.algo) {
    case Algorithm::e3d:
      out.state.p = ema_update(state.p, final_state, ctx.params.eta);
      out.state.q = e3d_update(state.q, seq, final_state, r, out.state.p, state.target, ctx.params);
      break;
    case Algorithm::uniform:
      out.state.p = ema_update(state.p, final_state, ctx.params.eta);
      break;
    case Algorithm::egreedy:
      out.state.q = egreedy_update(state.q, seq, r, ctx.params.alpha);
      break;
  }

  out.record.session = ctx.session;
  out.record.trial = ctx.trial;
  out.record.sequence = seq;
  out.record.final_state = final_state;
  out.record.extrinsic_reward = r;
  out.record.intrinsic_drive = -log_ratio(out.state.p, state.target, final_state) / ctx.params.beta;
  return out;
}

}  // namespace e3d
