#pragma once

#include <vector>

#include "hallwb/limits.hpp"
#include "hallwb/representation.hpp"

namespace hallwb {

// Z = ⊕_a Hom_k(m_{s(a)}, n_{t(a)}) and the coboundaries
// B = { (f_{t(a)} m_a - n_a f_{s(a)})_a : f ∈ ⊕_i Hom_k(m_i, n_i) }.
// With no relations every tuple is a cocycle, so Ext^1(m, n) = Z / B.
struct CocycleSpace {
  int z_dim = 0;
  int b_dim = 0;
  std::vector<int> complement;  // coordinates of Z spanning a complement of B
  int ext_dim() const { return z_dim - b_dim; }
};

CocycleSpace cocycle_space(const Representation& m, const Representation& n);
int ext1_dim(const Representation& m, const Representation& n);

// Middle term of the extension 0 -> n -> X -> m -> 0 given by the cocycle
// (flattened arrow by arrow, each block n_{t(a)} x m_{s(a)} row-major):
// X_i = n_i ⊕ m_i and X_a = [[n_a, phi_a], [0, m_a]].
Representation extension_module(const Representation& m, const Representation& n, const std::vector<int>& cocycle);

// One middle term per extension class up to nonzero scalars; the split
// extension m ⊕ n comes first. Throws CapacityError past limits.enum_cap.
std::vector<Representation> extension_middle_terms(const Representation& m, const Representation& n,
                                                   const Limits& limits = {});

}  // namespace hallwb
