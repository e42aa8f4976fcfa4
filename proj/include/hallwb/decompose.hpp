#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hallwb/limits.hpp"
#include "hallwb/representation.hpp"

namespace hallwb {

struct Summand {
  Representation module;
  int multiplicity = 0;
};

// Krull–Schmidt decomposition. `s` counts summands with multiplicity.
struct DecompositionReport {
  std::vector<Summand> summands;
  int s = 0;
};

// Fitting decomposition along phi ∈ End(m): with phi^n stable at n = dim m,
// returns (ker phi^n, im phi^n) when both are nonzero.
std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& m,
                                                                        const Morphism& phi);

// Recursive Fitting splits. A factor is declared indecomposable only after an
// exhaustive scan of End finds every element nilpotent or invertible; if that
// scan would exceed limits.end_scan_cap, CapacityError is thrown.
DecompositionReport decompose(const Representation& m, const Limits& limits = {});

bool is_indecomposable(const Representation& m, const Limits& limits = {});

struct LocalityReport {
  int end_dim = 0;
  bool local = false;
  std::uint64_t scanned = 0;  // elements of End(M) examined
};

// Exhaustively checks that every endomorphism is nilpotent or invertible.
LocalityReport check_local_endomorphism_ring(const Representation& m, const Limits& limits = {});

// Exact for indecomposable a, b: when a ≅ b the non-invertible maps a -> b
// form a proper subspace of Hom(a, b), so some basis element is invertible.
bool indecomposables_isomorphic(const Representation& a, const Representation& b);

// Dimension vectors, Hom dimensions, then a search for an invertible map, and
// finally Krull–Schmidt summand matching.
bool is_isomorphic(const Representation& m, const Representation& n, const Limits& limits = {});

// Stable 64-bit hash of the representation bytes; seeds the randomized phases.
std::uint64_t fingerprint(const Representation& m);

}  // namespace hallwb
