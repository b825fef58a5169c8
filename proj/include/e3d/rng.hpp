#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace e3d {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Random stream owned by one caller. Each uniform() or below() call consumes
/// exactly one 64-bit draw, so results are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream for session k depends only on (seed, k).
  static Rng for_session(std::uint64_t seed, std::uint64_t session) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(session + 0x632be59bd9b4e019ULL)));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

  void discard(unsigned long long draws) { engine_.discard(draws); }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace e3d
