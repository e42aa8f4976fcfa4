#include "hallwb/laurent.hpp"

#include <sstream>

namespace hallwb {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long long coeff, int exponent) {
  LaurentPoly r;
  if (coeff != 0) r.terms_[exponent] = coeff;
  return r;
}

long long LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r += LaurentPoly::monomial(-c, e);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r += LaurentPoly::monomial(ca * cb, ea + eb);
  }
  return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << "v^" << e;
    }
  }
  return out.str();
}

}  // namespace hallwb
