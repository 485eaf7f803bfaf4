#pragma once

#include "soclelab/zerodim.hpp"

namespace soclelab {

// The idealization A = R x (R/J) of a ring with a cyclic module, presented
// as a quotient of the base ring with one fresh variable w adjoined:
// A = R[w]/(J*w, w^2).
struct IdealizationSpec {
  RingPtr base;        // R = P/I_R
  Ideal module_ideal;  // J, so M = R/J
  RingPtr result;      // presentation of the idealization
  int w_index;         // position of the adjoined variable

  // Lifts a polynomial of the base ring into the extended ring.
  Polynomial lift(const Polynomial& f) const;
  Ideal lift(const Ideal& ideal) const;
};

IdealizationSpec idealize_cyclic(const RingPtr& base, const Ideal& j);

// Lemma check: soc(A) = soc(R) n ann(M) + soc(M), verified on an artinian
// quotient (the reduction A/IA = idealization of R/I with M/IM).
struct SocleSplitResult {
  int lhs;                  // socdim of the idealization quotient
  int socdim_module;        // socdim(M/IM)
  int socdim_ann_overlap;   // dim_k(soc(R/I) n ann(M/IM))
  int rhs;                  // socdim_module + socdim_ann_overlap
  bool equal;
};

SocleSplitResult socle_split_check(const IdealizationSpec& spec,
                                   const Ideal& artinian_quotient);

// Lemma check: index(qA on A) = index(q on M) + 1 for q irreducible
// origin-primary in R not containing ann(M).
struct IndexShiftResult {
  int idx_a;   // index of qA on the idealization
  int idx_m;   // index of q on M = socdim of R/(q + J)
  bool equal_plus_one;
};

IndexShiftResult index_shift_check(const RingPtr& base, const Ideal& q,
                                   const Ideal& j);

}  // namespace soclelab
