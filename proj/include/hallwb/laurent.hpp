#pragma once

#include <map>
#include <string>

namespace hallwb {

// Element of Z[v, v^-1]; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(long long coeff, int exponent);

  const std::map<int, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Highest exponent first, e.g. "3v^1", "2v^1 + 1", "1 - v^-2".
  std::string to_string() const;

 private:
  std::map<int, long long> terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hallwb
