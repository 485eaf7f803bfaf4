#pragma once

#include "soclelab/groebner.hpp"
#include "soclelab/linalg.hpp"

namespace soclelab {

// Raised when m^N * V is not contained in J for any N up to the cap, i.e.
// the subquotient V/J failed the finite-length certificate.
class cap_exceeded : public error {
 public:
  explicit cap_exceeded(int cap)
      : error("annihilating power cap " + std::to_string(cap) +
              " exceeded: module is not finite length (or the cap is too "
              "small)"),
        cap_value(cap) {}
  int cap_value;
};

constexpr int kDefaultAnnCap = 32;

// A finite-length subquotient V/J of the quotient ring (V >= J ideals of A,
// given by preimages).  Basis vectors are polynomials in normal form modulo
// J; the per-variable action matrices commute and are nilpotent.
struct FiniteLengthModule {
  RingPtr ring;
  Ideal numerator;    // V (relations included)
  Ideal denominator;  // J (relations included)
  int ann_power;      // least N with m^N * V <= J
  std::vector<Polynomial> basis_vectors;
  std::vector<DenseMatrix> action;  // one per variable

  int length() const { return static_cast<int>(basis_vectors.size()); }
};

// Least N <= cap with m^N * gens(V) <= J; relations of the ring are added to
// both sides.  Throws cap_exceeded when no such N exists below the cap and
// std::invalid_argument when J is not contained in V.
int annihilating_power(const Ideal& v, const Ideal& j,
                       int cap = kDefaultAnnCap);

FiniteLengthModule build_module(const Ideal& v, const Ideal& j,
                                int cap = kDefaultAnnCap);

int module_length(const FiniteLengthModule& mod);
// Dimension of the common kernel of the action matrices.
int module_socle_dim(const FiniteLengthModule& mod);

}  // namespace soclelab
