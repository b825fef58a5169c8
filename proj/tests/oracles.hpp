#pragma once

// Test-only reference implementations. None of these call into the library's
// dynamics or propagation code, so they can check it independently.

#include <array>
#include <cstdint>
#include <string_view>

namespace e3d::oracle {

// Layout drawn by hand: cells sit at odd coordinates, '#' marks a blocked edge.
inline constexpr std::array<std::string_view, 7> kMap{
    "#############",
    "#. . .#. . .#",
    "#           #",
    "#. . . . . .#",
    "#           #",
    "#. . .#. . .#",
    "#############",
};

// Moves indexed E, S, W, N.
inline int map_step(int state, int action) {
  static constexpr int dr[] = {0, 1, 0, -1};
  static constexpr int dc[] = {1, 0, -1, 0};
  const int r = state / 6;
  const int c = state % 6;
  if (kMap[2 * r + 1 + dr[action]][2 * c + 1 + dc[action]] == '#') return state;
  return (r + dr[action]) * 6 + (c + dc[action]);
}

// Final-state counts over all 4^7 sequences, produced by an offline Python
// enumeration over kMap.
inline constexpr std::array<std::uint32_t, 18> kUniformCounts{
    2569, 2158, 1672, 113, 34, 9, 2178, 1718, 1161, 302, 88, 14, 1776, 1429, 1007, 113, 34, 9,
};

// Literal enumeration of the 16384 sequences with per-slot probabilities.
template <typename SlotProbs>
std::array<double, 18> enumerate_final_distribution(const SlotProbs& slots) {
  std::array<double, 18> dist{};
  for (int code = 0; code < (1 << 14); ++code) {
    int s = 0;
    double prob = 1.0;
    for (int i = 0; i < 7; ++i) {
      const int a = (code >> (2 * i)) & 3;
      prob *= slots[i][a];
      s = map_step(s, a);
    }
    dist[s] += prob;
  }
  return dist;
}

}  // namespace e3d::oracle
