#pragma once

#include <span>
#include <string>
#include <vector>

#include "hallwb/matrix.hpp"
#include "hallwb/quiver.hpp"

namespace hallwb {

// A finite-dimensional representation of a quiver over F_p: one vector space
// F_p^{d_i} per vertex and one matrix of shape d_{t(a)} x d_{s(a)} per arrow.
class Representation {
 public:
  Representation() = default;
  Representation(QuiverPtr quiver, int p, std::vector<int> dims, std::vector<Matrix> maps);

  static Representation zero(QuiverPtr quiver, int p);
  static Representation simple(QuiverPtr quiver, int p, int vertex);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  int p() const { return p_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int vertex) const { return dims_[vertex]; }
  int total_dim() const;
  const Matrix& map(int arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }

  // Dimension vector followed by every arrow matrix, as raw bytes. Equal
  // bytes means equal matrix tuples (not merely isomorphic modules).
  std::string bytes() const;
  std::string dims_string() const;  // "2" on one vertex, "(1,2,0)" otherwise

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  QuiverPtr quiver_;
  int p_ = 2;
  std::vector<int> dims_;
  std::vector<Matrix> maps_;
};

// Throws MismatchError unless a and b live over the same quiver and field.
void check_compatible(const Representation& a, const Representation& b);

Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_sum(const std::vector<Representation>& ms, QuiverPtr quiver, int p);
Representation direct_power(const Representation& m, int copies);

// A morphism between representations: one matrix per vertex.
using Morphism = std::vector<Matrix>;

Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& from, const Representation& to);
Morphism compose(const Morphism& after, const Morphism& before);
Morphism add(const Morphism& a, const Morphism& b);
Morphism scale(const Morphism& a, int scalar);
Morphism morphism_power(const Morphism& f, int k);
bool is_invertible(const Morphism& f);
bool is_nilpotent(const Morphism& f);
bool is_zero(const Morphism& f);
// f_{t(a)} M_a == N_a f_{s(a)} for every arrow a.
bool is_intertwiner(const Morphism& f, const Representation& from, const Representation& to);

struct HomSpace {
  std::vector<Morphism> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  Morphism combination(std::span<const int> coefficients) const;
};

// Basis of Hom(m, n), from the kernel of the intertwiner system.
HomSpace hom_space(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

// Vertex-wise subspaces; closed when M_a(U_{s(a)}) ⊆ U_{t(a)} for all arrows.
using SubspaceTuple = std::vector<Subspace>;

bool is_closed(const Representation& m, const SubspaceTuple& u);
// Induced representation on U (coordinates in the RREF basis of each U_i).
Representation restrict_to(const Representation& m, const SubspaceTuple& u);
// Induced representation on M/U (coordinates on the non-pivot columns).
Representation quotient_by(const Representation& m, const SubspaceTuple& u);
SubspaceTuple zero_tuple(const Representation& m);
SubspaceTuple full_tuple(const Representation& m);

// Square operator on the total space, block (j,i) = sum of M_a over a: i -> j.
Matrix total_operator(const Representation& m);
// Every sufficiently long path acts as zero.
bool is_nilpotent(const Representation& m);

// Dual representation over the opposite quiver (all matrices transposed).
Representation dual(const Representation& m, QuiverPtr opposite_quiver);
// Extension by zero along a subquiver embedding (matching vertex ids and labels).
Representation extend_by_zero(const Representation& m, QuiverPtr larger);

}  // namespace hallwb
