#include "plasmodium/checksum.hpp"

#include <bit>
#include <cstdio>

namespace plasmodium {

void Fnv1a64::update_double(double v) noexcept { update_u64(std::bit_cast<std::uint64_t>(v)); }

std::string format_checksum(std::uint64_t checksum) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(checksum));
  return buf;
}

}  // namespace plasmodium
