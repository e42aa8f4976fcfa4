#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallwb/json_io.hpp"
#include "hallwb/laurent.hpp"
#include "hallwb/limits.hpp"
#include "hallwb/registry.hpp"
#include "hallwb/representation.hpp"

namespace hallwb {

// Every arrow-closed tuple of subspaces (U_i ⊆ X_i). With `dims` set, only
// those with dim U_i = dims[i]. Throws CapacityError when the product of the
// per-vertex subspace counts exceeds limits.enum_cap.
std::vector<SubspaceTuple> subreps(const Representation& x, const Limits& limits = {});
std::vector<SubspaceTuple> subreps(const Representation& x, const std::vector<int>& dims,
                                   const Limits& limits = {});

// F^X_{M,N}: submodules U ⊆ X with U ≅ N and X/U ≅ M.
std::uint64_t hall_number(const Representation& x, const Representation& m, const Representation& n,
                          const Limits& limits = {});

// Registry keys of every X admitting 0 -> n -> X -> m -> 0, sorted.
std::vector<std::string> middle_terms(const Representation& m, const Representation& n, IsoRegistry& registry);

struct HallContext {
  QuiverPtr quiver;
  int p = 2;
  bool nilpotent = false;
};

// Finite Z[v, v^-1]-combination of isomorphism classes.
class HallElement {
 public:
  explicit HallElement(HallContext context) : context_(std::move(context)) {}

  const HallContext& context() const { return context_; }
  const std::map<std::string, LaurentPoly>& terms() const { return terms_; }
  const Representation& module(const std::string& key) const { return modules_.at(key); }
  LaurentPoly coefficient(const std::string& key) const;
  std::vector<std::string> support() const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::string& key, const Representation& module, const LaurentPoly& coeff);
  HallElement& operator+=(const HallElement& other);
  HallElement scaled(const LaurentPoly& factor) const;

  // Terms compare by key and coefficient.
  friend bool operator==(const HallElement& a, const HallElement& b) { return a.terms_ == b.terms_; }

  Json to_json() const;
  // One line per term: "<coeff> [dim <d>]  <maps>".
  std::string to_string() const;

 private:
  HallContext context_;
  std::map<std::string, LaurentPoly> terms_;
  std::map<std::string, Representation> modules_;
};

// [m] as an element (the key comes from the registry).
HallElement basis_element(const Representation& m, IsoRegistry& registry, bool nilpotent = false);

// [m] ⋄ [n] = Σ F^X_{m,n} [X].
HallElement hall_product(const Representation& m, const Representation& n, IsoRegistry& registry,
                         bool nilpotent = false);
// [m] * [n] = v^{<m,n>} [m] ⋄ [n].
HallElement twisted_product(const Representation& m, const Representation& n, IsoRegistry& registry,
                            bool nilpotent = false);
// Bilinear extension of either product.
HallElement multiply(const HallElement& a, const HallElement& b, IsoRegistry& registry, bool twisted = false);

// dim Hom(m, n) - dim Ext^1(m, n).
int euler_form(const Representation& m, const Representation& n);
// Σ_i d_i e_i - Σ_a d_{s(a)} e_{t(a)}.
int euler_chi(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e);

}  // namespace hallwb
