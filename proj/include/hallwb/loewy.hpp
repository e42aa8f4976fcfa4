#pragma once

#include <vector>

#include "hallwb/representation.hpp"

namespace hallwb {

struct SubrepEmbedding {
  Representation module;
  SubspaceTuple spaces;  // the inclusion, vertex by vertex
};

struct LoewyData {
  SubrepEmbedding radical;
  SubrepEmbedding socle;
  Representation top;  // m / radical
};

// Radical: rad_j = Σ_{a: t(a)=j} im M_a. Socle: soc_i = ∩_{a: s(a)=i} ker M_a.
// Valid on acyclic quivers and for nilpotent representations; anything else
// raises UnsupportedError.
LoewyData loewy_data(const Representation& m);
SubspaceTuple radical_spaces(const Representation& m);
SubspaceTuple socle_spaces(const Representation& m);
void require_loewy_support(const Representation& m);

// Total dimensions of rad^k m / rad^{k+1} m for k = 0, 1, ... until zero.
std::vector<int> radical_layer_dims(const Representation& m);
bool is_uniserial(const Representation& m);

struct ProjectiveInjective {
  Representation projective;  // basis: paths starting at the vertex
  Representation injective;   // basis: duals of paths ending at the vertex
};

// Indecomposable projective P(i) and injective I(i); the quiver must be acyclic.
ProjectiveInjective proj_inj(QuiverPtr quiver, int p, int vertex);

}  // namespace hallwb
