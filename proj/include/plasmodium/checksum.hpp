#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace plasmodium {

/// Incremental FNV-1a, 64-bit.
class Fnv1a64 {
 public:
  void update(std::string_view bytes) noexcept {
    for (const unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
  }
  /// Feeds the value's bytes least significant first.
  void update_u64(std::uint64_t v) noexcept {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (v >> (8 * i)) & 0xffU;
      hash_ *= 0x100000001b3ULL;
    }
  }
  void update_double(double v) noexcept;

  [[nodiscard]] std::uint64_t value() const noexcept { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

[[nodiscard]] inline std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  Fnv1a64 h;
  h.update(bytes);
  return h.value();
}

/// "fnv1a64:" followed by 16 lowercase hex digits.
[[nodiscard]] std::string format_checksum(std::uint64_t checksum);

}  // namespace plasmodium
