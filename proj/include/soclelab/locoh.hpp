#pragma once

#include <optional>

#include "soclelab/finlen.hpp"
#include "soclelab/rng.hpp"
#include "soclelab/zerodim.hpp"

namespace soclelab {

// H^0_m(A) = (I_A : m^inf)/I_A, realized as a finite-length module.
FiniteLengthModule h0_module(const RingPtr& ring, int cap = kDefaultAnnCap);

// True iff H^0 vanishes, i.e. depth A > 0.
bool has_positive_depth(const RingPtr& ring);

struct PrincipalReduction {
  Polynomial element;  // x with m^(c+1) = x * m^c
  int c;               // reduction number of m with respect to x
};

// Finds a principal reduction of the maximal ideal of a one-dimensional
// ring by trying random linear combinations of the variables.
PrincipalReduction principal_reduction(const RingPtr& ring, Rng& rng,
                                       int c_cap = 32, int retries = 32);

// The dimension-1 certificate: every parameter ideal inside m^ell has index
// socdim(A) + type(A/W), with ell = max{c, d} + 1 explicit.
struct Dim1Certificate {
  Ideal w_preimage;            // preimage of W = H^0
  int c;                       // reduction number of m
  int d;                       // least d with m^d n W = 0
  int ell;                     // max{c, d} + 1
  int socdim_ring;             // socdim(A) = socdim(W)
  int type_mod_w;              // type(A/W)
  int predicted_index;         // socdim_ring + type_mod_w
  Polynomial reduction_element;
};

Dim1Certificate dim1_certificate(const RingPtr& ring, Rng& rng);

// U_i = ((x_1,...,x_i-hat,...,x_d)A : x_i), the unmixed component of the
// partial parameter ideal; preconditions checked against the full system.
Ideal unmixed_component(const std::vector<Polynomial>& q_without_xi,
                        const Polynomial& xi,
                        const std::vector<Polynomial>& full_system,
                        const RingPtr& ring);

// Socle dimension of K = sum_i (U_i + x_i A) / qA, the kernel of the
// canonical map A/qA -> H^d_m(A).
int kernel_K_socdim(const std::vector<Polynomial>& q_gens, const RingPtr& ring,
                    int cap = kDefaultAnnCap);

// Socle dimension of H^1_m(A) realized as (((a) : b) + (b))/(b) for a
// standard pair (a, b).  nullopt when the realization is not finite length
// (the cap was exceeded), which is itself a meaningful outcome.
std::optional<int> h1_socdim(const Polynomial& a, const Polynomial& b,
                             const RingPtr& ring, int cap = kDefaultAnnCap);

// Checks the weak-sequence colon conditions for all exponent tuples with
// entries up to the bound (a bound-limited standardness proxy).
bool check_weak_sequence(const std::vector<Polynomial>& xs,
                         const RingPtr& ring, int bound = 3);

// index(q) - socdim K(q); the top local cohomology socle dimension for deep
// parameter ideals.  Throws when the difference is negative (q not deep
// enough for socle surjectivity).
int h2_socdim_derived(const std::vector<Polynomial>& q_gens,
                      const RingPtr& ring, int cap = kDefaultAnnCap);

struct GsWitness {
  bool found;
  std::vector<int> exponents;
  int index;
};

// Searches exponent tuples lexicographically for a power-parameter ideal
// (x_1^e1, ..., x_d^ed) whose index reaches the Goto-Suzuki lower bound.
GsWitness gs_lower_bound_witness(const std::vector<Polynomial>& xs,
                                 const RingPtr& ring, int max_exp, int target);

// Everything the dimension-2 theorem needs for one parameter pair.
struct Dim2Report {
  Polynomial a, b;
  Ideal u_a, u_b;
  int index;
  int socdim_k;
  int socdim_h2_derived;            // index - socdim_k
  std::optional<int> socdim_h1;     // nullopt: not finite length
  bool standard_checked;            // weak-sequence proxy up to the bound
  int standard_checked_to;
  bool directness;                  // (U_a + (b)) n (U_b + (a)) = q
  bool colon_symmetry;              // U_a n U_b = (a) n (b)
};

Dim2Report dim2_report(const Polynomial& a, const Polynomial& b,
                       const RingPtr& ring, int weak_bound = 3,
                       int cap = kDefaultAnnCap);

// Validates that the given elements generate a parameter ideal: exactly
// dim(A) of them, cofinite and origin-primary on A.
bool is_parameter_system(const std::vector<Polynomial>& xs,
                         const RingPtr& ring);

}  // namespace soclelab
