#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace plasmodium {

/**
 * Seeded generator with a frozen draw contract.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. The derived draws below are implemented here rather than through
 * <random> distributions, whose algorithms are implementation-defined:
 *
 *   below(n)    full 64-bit word, rejecting words below 2^64 mod n, then mod n
 *   unit()      top 53 bits scaled by 2^-53, in [0, 1)
 *   coin()      most significant bit of one word
 *
 * Every derived draw increments draw_count() by one regardless of how many
 * engine words rejection consumed.
 */
class Rng {
 public:
  static constexpr std::string_view kAlgorithm =
      "mt19937_64;below=reject-mod;unit=53bit;coin=msb";

  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

  double unit();

  /// Uniform angle in degrees, [0, 360).
  double angle() { return unit() * 360.0; }

  bool coin();

  [[nodiscard]] std::uint64_t draw_count() const noexcept { return draws_; }

  friend bool operator==(const Rng& a, const Rng& b) {
    return a.engine_ == b.engine_ && a.draws_ == b.draws_;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace plasmodium
