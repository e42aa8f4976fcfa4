#pragma once

#include <cstdint>

namespace hallwb {

// Caps shared by every enumerating operation. Exceeding a cap raises
// CapacityError.
struct Limits {
  std::uint64_t enum_cap = 1'000'000;      // objects produced per enumeration call
  std::uint64_t end_scan_cap = 1'000'000;  // elements scanned when certifying End(M) local
  int random_tries = 48;                   // random endomorphisms tried before exhaustive scans
  std::uint64_t seed = 0x5eed'1234'abcdULL;

  // Defaults, with HALL_AUDIT_CAP (if set and positive) overriding both caps.
  static Limits from_env();
};

// p^e, saturating at UINT64_MAX.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e);

}  // namespace hallwb
