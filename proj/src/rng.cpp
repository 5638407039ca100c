#include "plasmodium/rng.hpp"

#include <cassert>

namespace plasmodium {

std::uint64_t Rng::below(std::uint64_t n) {
  assert(n > 0);
  ++draws_;
  // Reject the low 2^64 mod n words so every residue is equally likely.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

int Rng::uniform_int(int lo, int hi) {
  assert(hi >= lo);
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  return lo + static_cast<int>(below(span));
}

double Rng::unit() {
  ++draws_;
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool Rng::coin() {
  ++draws_;
  return (engine_() >> 63) != 0;
}

}  // namespace plasmodium
