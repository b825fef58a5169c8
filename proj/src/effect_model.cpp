#include "e3d/effect_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace e3d {

EffectDistribution init_uniform() { return EffectDistribution::uniform(); }

EffectDistribution ema_update(const EffectDistribution& p, StateId observed, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("effect rate eta must lie in [0, 1]");
  }
  EffectDistribution out = p;
  const double keep = 1.0 - eta;
  double others = 0.0;
  for (std::size_t i = 0; i < kStateCount; ++i) {
    if (i == observed.index()) continue;
    out.probs_[i] = keep * p.probs_[i];
    others += out.probs_[i];
  }
  out.probs_[observed.index()] = std::max(0.0, 1.0 - others);
  return out;
}

double log_ratio(const EffectDistribution& p, const EffectDistribution& target, StateId state) {
  return std::log(std::max(p[state], kProbabilityFloor)) -
         std::log(std::max(target[state], kProbabilityFloor));
}

}  // namespace e3d
