#include "hallwb/field.hpp"

#include "hallwb/error.hpp"

namespace hallwb {

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_supported_prime(p)) {
    throw InputError("unsupported field characteristic " + std::to_string(p) +
                     " (expected a prime in {2,3,5,7})");
  }
  for (int a = 1; a < p; ++a) {
    for (int b = 1; b < p; ++b) {
      if ((a * b) % p == 1) inv_[a] = b;
    }
  }
}

}  // namespace hallwb
