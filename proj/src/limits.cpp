#include "hallwb/limits.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace hallwb {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("HALL_AUDIT_CAP"); raw != nullptr) {
    try {
      auto cap = std::stoull(raw);
      if (cap > 0) {
        limits.enum_cap = cap;
        limits.end_scan_cap = cap;
      }
    } catch (const std::exception&) {
      // unparsable values leave the defaults in place
    }
  }
  return limits;
}

std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

}  // namespace hallwb
