#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace e3d {

inline constexpr std::size_t kActionCount = 4;
inline constexpr std::size_t kSequenceLength = 7;
inline constexpr int kGridHeight = 3;
inline constexpr int kGridWidth = 6;
inline constexpr std::size_t kStateCount = kGridHeight * kGridWidth;

/// Elementary displacement. East is +1 column, south is +1 row.
enum class Action : std::uint8_t { E = 0, S = 1, W = 2, N = 3 };

inline constexpr std::array<Action, kActionCount> kAllActions{Action::E, Action::S, Action::W,
                                                              Action::N};

constexpr std::size_t index_of(Action a) noexcept { return static_cast<std::size_t>(a); }
constexpr Action action_at(std::size_t index) noexcept { return static_cast<Action>(index); }

char to_char(Action a) noexcept;
std::optional<Action> action_from_char(char c) noexcept;

/// Cell index, row-major over the 3x6 grid.
class StateId {
 public:
  constexpr StateId() = default;
  /// Throws std::out_of_range unless 0 <= id < kStateCount.
  explicit StateId(int id);
  static StateId from_row_col(int row, int col);

  constexpr int value() const noexcept { return id_; }
  constexpr std::size_t index() const noexcept { return static_cast<std::size_t>(id_); }
  constexpr int row() const noexcept { return id_ / kGridWidth; }
  constexpr int col() const noexcept { return id_ % kGridWidth; }

  friend constexpr bool operator==(StateId, StateId) = default;
  friend constexpr auto operator<=>(StateId, StateId) = default;

 private:
  int id_ = 0;
};

/// Open-loop command: seven moves chosen before execution.
using ActionSequence = std::array<Action, kSequenceLength>;

std::string to_string(const ActionSequence& seq);
/// Parses a 7-character string over {E,S,W,N}; throws std::invalid_argument otherwise.
ActionSequence parse_sequence(std::string_view text);

/// Probabilities of the four actions at one slot.
using SlotDistribution = std::array<double, kActionCount>;

/// Probability vector over the 18 final states.
class EffectDistribution {
 public:
  /// Uniform over all states.
  EffectDistribution();

  static EffectDistribution uniform();
  static EffectDistribution point_mass(StateId state);
  /// Validates nonnegativity and that the entries sum to 1 within 1e-9.
  static EffectDistribution from_probs(std::span<const double> probs);
  /// Normalizes nonnegative counts; throws if the total is zero.
  static EffectDistribution from_counts(std::span<const std::uint64_t> counts);

  double operator[](StateId s) const noexcept { return probs_[s.index()]; }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }
  std::span<const double, kStateCount> probs() const noexcept { return probs_; }

  friend bool operator==(const EffectDistribution&, const EffectDistribution&) = default;

 private:
  friend EffectDistribution ema_update(const EffectDistribution&, StateId, double);
  std::array<double, kStateCount> probs_;
};

}  // namespace e3d
