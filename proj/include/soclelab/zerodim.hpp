#pragma once

#include "soclelab/groebner.hpp"
#include "soclelab/linalg.hpp"

namespace soclelab {

// A zero-dimensional quotient P/I presented by its staircase (standard
// monomial) basis and one multiplication matrix per variable.  The matrices
// pairwise commute; socle dimensions are kernel dimensions.
struct QuotientAlgebra {
  RingPtr ring;
  Ideal ideal;
  GroebnerBasis gb;
  std::vector<Monomial> staircase;  // ascending, staircase[0] = 1
  std::vector<DenseMatrix> mult;    // one per variable

  int dimension() const { return static_cast<int>(staircase.size()); }
  int staircase_index(const Monomial& m) const;  // -1 if not standard
  // Coordinates of NF(f) in the staircase basis.
  Vec coordinates(const Polynomial& f) const;
};

// Staircase and multiplication matrices; throws unless dim(I) = 0.
// The ideal is taken literally (relations are NOT added; callers working
// A-relatively pass I.plus_relations()).
QuotientAlgebra quotient_basis(const Ideal& ideal);

int colength(const Ideal& ideal);
int colength(const QuotientAlgebra& q);

// True iff every variable is nilpotent modulo the ideal, i.e. the quotient
// is supported only at the origin.
bool is_origin_primary(const Ideal& ideal);
bool is_origin_primary(const QuotientAlgebra& q);

// Socle dimension of an origin-primary artinian quotient, computed both as
// the common kernel of the multiplication matrices and through the Groebner
// colon (I : m); the two routes must agree.
int socle_dimension(const Ideal& ideal);
int socle_dimension(const QuotientAlgebra& q);

// Basis of the socle as coordinate vectors in the staircase basis.
std::vector<Vec> socle_basis(const QuotientAlgebra& q);

// Spanning vectors (in staircase coordinates) of the image of the ideal
// generated by gens inside the artinian quotient: the closure of the
// generators' classes under the variable actions.
std::vector<Vec> ideal_image_subspace(const QuotientAlgebra& q,
                                      const std::vector<Polynomial>& gens);

struct IndexReport {
  int index;
  bool is_parameter_ideal;  // generator count = dim A and cofinite
};

// Index of reducibility of q on A = number of components of an irredundant
// irreducible decomposition of qA = socle dimension of A/qA.
IndexReport index_of_reducibility(const Ideal& q);

}  // namespace soclelab
