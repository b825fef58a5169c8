#pragma once

#include "e3d/types.hpp"

namespace e3d {

/// Probabilities are clamped to this value before taking logarithms.
inline constexpr double kProbabilityFloor = 1e-12;

/// Effect model before any observation: 1/18 everywhere.
EffectDistribution init_uniform();

/// (1 - eta) * p + eta * indicator(observed). The observed entry is written as
/// one minus the rest, so repeated updates never drift off the simplex.
/// Throws std::invalid_argument unless 0 <= eta <= 1.
EffectDistribution ema_update(const EffectDistribution& p, StateId observed, double eta);

/// ln p(state) - ln target(state), both floored at kProbabilityFloor.
/// Positive when the state is visited more often than the target asks for.
double log_ratio(const EffectDistribution& p, const EffectDistribution& target, StateId state);

}  // namespace e3d
