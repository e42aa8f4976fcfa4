#pragma once

#include <array>
#include <cstdint>

namespace hallwb {

inline constexpr int kMaxPrime = 7;

bool is_supported_prime(int p);

// The prime field F_p, p in {2, 3, 5, 7}. Elements are canonical integers in [0, p).
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int neg(int a) const { return (p_ - a) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  // a must be nonzero.
  int inv(int a) const { return inv_[a]; }
  int reduce(long long a) const {
    long long r = a % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }

 private:
  int p_;
  std::array<int, kMaxPrime> inv_{};
};

}  // namespace hallwb
