#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace fdmac {

/// Seeded 64-bit generator. The engine's output sequence is fixed by the
/// C++ standard and the two draws below are computed here rather than with
/// std:: distributions (whose algorithms are implementation-defined), so a
/// seed reproduces the same run on every platform.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace fdmac
