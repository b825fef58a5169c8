#include "e3d/types.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace e3d {

char to_char(Action a) noexcept {
  switch (a) {
    case Action::E: return 'E';
    case Action::S: return 'S';
    case Action::W: return 'W';
    case Action::N: return 'N';
  }
  return '?';
}

std::optional<Action> action_from_char(char c) noexcept {
  switch (c) {
    case 'E': return Action::E;
    case 'S': return Action::S;
    case 'W': return Action::W;
    case 'N': return Action::N;
    default: return std::nullopt;
  }
}

StateId::StateId(int id) : id_(id) {
  if (id < 0 || id >= static_cast<int>(kStateCount)) {
    throw std::out_of_range("state id " + std::to_string(id) + " outside 0..17");
  }
}

StateId StateId::from_row_col(int row, int col) {
  if (row < 0 || row >= kGridHeight || col < 0 || col >= kGridWidth) {
    throw std::out_of_range("cell (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside the 3x6 grid");
  }
  return StateId(row * kGridWidth + col);
}

std::string to_string(const ActionSequence& seq) {
  std::string out;
  out.reserve(seq.size());
  for (Action a : seq) out.push_back(to_char(a));
  return out;
}

ActionSequence parse_sequence(std::string_view text) {
  if (text.size() != kSequenceLength) {
    throw std::invalid_argument("action sequence must have exactly 7 moves, got " +
                                std::to_string(text.size()));
  }
  ActionSequence seq{};
  for (std::size_t i = 0; i < kSequenceLength; ++i) {
    auto a = action_from_char(text[i]);
    if (!a) throw std::invalid_argument(std::string("unknown move '") + text[i] + "'");
    seq[i] = *a;
  }
  return seq;
}

EffectDistribution::EffectDistribution() { probs_.fill(1.0 / static_cast<double>(kStateCount)); }

EffectDistribution EffectDistribution::uniform() { return EffectDistribution(); }

EffectDistribution EffectDistribution::point_mass(StateId state) {
  EffectDistribution d;
  d.probs_.fill(0.0);
  d.probs_[state.index()] = 1.0;
  return d;
}

EffectDistribution EffectDistribution::from_probs(std::span<const double> probs) {
  if (probs.size() != kStateCount) {
    throw std::invalid_argument("effect distribution needs 18 entries, got " +
                                std::to_string(probs.size()));
  }
  EffectDistribution d;
  double sum = 0.0;
  for (std::size_t i = 0; i < kStateCount; ++i) {
    if (!std::isfinite(probs[i]) || probs[i] < 0.0) {
      throw std::invalid_argument("effect distribution entries must be finite and nonnegative");
    }
    d.probs_[i] = probs[i];
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("effect distribution must sum to 1");
  }
  return d;
}

EffectDistribution EffectDistribution::from_counts(std::span<const std::uint64_t> counts) {
  if (counts.size() != kStateCount) {
    throw std::invalid_argument("count vector needs 18 entries");
  }
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total == 0) throw std::invalid_argument("cannot normalize an all-zero count vector");
  EffectDistribution d;
  for (std::size_t i = 0; i < kStateCount; ++i) {
    d.probs_[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return d;
}

}  // namespace e3d
