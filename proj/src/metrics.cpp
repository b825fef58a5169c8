#include "e3d/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "e3d/effect_model.hpp"

namespace e3d {

namespace {

void require_same_size(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("distributions differ in length");
}

}  // namespace

double entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  require_same_size(p, q);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    d += p[i] * (std::log(p[i]) - std::log(std::max(q[i], kProbabilityFloor)));
  }
  return std::max(d, 0.0);
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  require_same_size(p, q);
  double l1 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) l1 += std::abs(p[i] - q[i]);
  return 0.5 * l1;
}

std::vector<std::uint64_t> cumulative_rewards(std::span<const TrialRecord> records) {
  std::vector<std::uint64_t> out;
  out.reserve(records.size());
  std::uint64_t total = 0;
  for (const auto& r : records) {
    total += static_cast<std::uint64_t>(r.extrinsic_reward);
    out.push_back(total);
  }
  return out;
}

std::optional<std::uint64_t> first_success_trial(std::span<const TrialRecord> records) {
  auto it = std::find_if(records.begin(), records.end(),
                         [](const TrialRecord& r) { return r.extrinsic_reward > 0; });
  if (it == records.end()) return std::nullopt;
  return it->trial;
}

std::array<std::uint64_t, kStateCount> visit_counts(std::span<const TrialRecord> records) {
  std::array<std::uint64_t, kStateCount> counts{};
  for (const auto& r : records) ++counts[r.final_state.index()];
  return counts;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace e3d
