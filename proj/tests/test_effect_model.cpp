#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <limits>

#include "e3d/effect_model.hpp"
#include "e3d/metrics.hpp"
#include "e3d/rng.hpp"

using namespace e3d;

namespace {

double total(const EffectDistribution& p) {
  double s = 0.0;
  for (double v : p.probs()) s += v;
  return s;
}

EffectDistribution with_entry(std::size_t index, double value) {
  std::array<double, kStateCount> probs{};
  const double rest = (1.0 - value) / 17.0;
  probs.fill(rest);
  probs[index] = value;
  return EffectDistribution::from_probs(probs);
}

}  // namespace

TEST_CASE("init_uniform") {
  const auto p = init_uniform();
  for (double v : p.probs()) CHECK(v == 1.0 / 18.0);
  CHECK(entropy(p) == doctest::Approx(std::log(18.0)).epsilon(1e-14));
  CHECK(std::abs(total(p) - 1.0) <= 1e-15);
}

TEST_CASE("ema_update examples") {
  const auto p = ema_update(init_uniform(), StateId(5), 0.01);
  CHECK(p[StateId(5)] == doctest::Approx(0.99 / 18.0 + 0.01).epsilon(1e-14));
  CHECK(p[StateId(5)] == doctest::Approx(0.065).epsilon(1e-12));
  for (int s = 0; s < 18; ++s) {
    if (s != 5) CHECK(p[StateId(s)] == doctest::Approx(0.99 / 18.0).epsilon(1e-14));
  }

  const auto same = ema_update(p, StateId(2), 0.0);
  for (std::size_t i = 0; i < kStateCount; ++i) CHECK(same[i] == doctest::Approx(p[i]).epsilon(1e-15));

  const auto point = ema_update(p, StateId(9), 1.0);
  CHECK(point == EffectDistribution::point_mass(StateId(9)));

  CHECK_THROWS_AS(ema_update(p, StateId(0), 1.5), std::invalid_argument);
  CHECK_THROWS_AS(ema_update(p, StateId(0), -0.1), std::invalid_argument);
}

TEST_CASE("ema_update contracts toward a repeated observation in closed form") {
  constexpr double eta = 0.05;
  auto p = init_uniform();
  const double p0 = p[StateId(4)];
  for (int t = 1; t <= 200; ++t) {
    p = ema_update(p, StateId(4), eta);
    const double expected = 1.0 - std::pow(1.0 - eta, t) * (1.0 - p0);
    CHECK(p[StateId(4)] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("ema_update keeps the simplex over long random runs") {
  Rng rng(77);
  auto p = init_uniform();
  for (int t = 0; t < 200000; ++t) {
    p = ema_update(p, StateId(static_cast<int>(rng.below(18))), rng.uniform());
  }
  for (double v : p.probs()) CHECK(v >= 0.0);
  CHECK(std::abs(total(p) - 1.0) <= 1e-12);
}

TEST_CASE("entries never drop below (1 - eta)^T / 18") {
  constexpr double eta = 0.01;
  constexpr int kTrials = 5000;
  auto p = init_uniform();
  for (int t = 0; t < kTrials; ++t) p = ema_update(p, StateId(0), eta);
  const double bound = std::pow(1.0 - eta, kTrials) / 18.0;
  CHECK(bound > std::numeric_limits<double>::min());
  CHECK(bound == doctest::Approx(8.331e-24).epsilon(1e-2));
  for (int s = 1; s < 18; ++s) CHECK(p[StateId(s)] >= bound * (1.0 - 1e-9));
}

TEST_CASE("log_ratio examples and sign") {
  const auto target = EffectDistribution::uniform();
  CHECK(log_ratio(target, target, StateId(3)) == 0.0);

  const auto high = with_entry(6, 0.1);
  CHECK(log_ratio(high, target, StateId(6)) == doctest::Approx(std::log(1.8)).epsilon(1e-13));
  CHECK(log_ratio(high, target, StateId(6)) == doctest::Approx(0.58779).epsilon(1e-5));

  const auto low = with_entry(6, 0.01);
  CHECK(log_ratio(low, target, StateId(6)) == doctest::Approx(std::log(0.18)).epsilon(1e-13));
  CHECK(log_ratio(low, target, StateId(6)) == doctest::Approx(-1.7148).epsilon(1e-4));
}

TEST_CASE("log_ratio stays finite at zero probability") {
  const auto point = EffectDistribution::point_mass(StateId(0));
  const double r = log_ratio(point, EffectDistribution::uniform(), StateId(1));
  CHECK(std::isfinite(r));
  CHECK(r == doctest::Approx(std::log(1e-12) - std::log(1.0 / 18.0)));
}

TEST_CASE("EffectDistribution validation") {
  std::array<double, 18> bad{};
  CHECK_THROWS_AS(EffectDistribution::from_probs(bad), std::invalid_argument);
  bad.fill(1.0 / 18.0);
  bad[0] = -bad[0];
  CHECK_THROWS_AS(EffectDistribution::from_probs(bad), std::invalid_argument);
  std::array<double, 17> short_probs{};
  CHECK_THROWS_AS(EffectDistribution::from_probs(short_probs), std::invalid_argument);
  std::array<std::uint64_t, 18> zeros{};
  CHECK_THROWS_AS(EffectDistribution::from_counts(zeros), std::invalid_argument);
}
