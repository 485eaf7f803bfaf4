#include "soclelab/idealize.hpp"

#include <algorithm>

namespace soclelab {

namespace {

// Appends a fresh variable slot at the end of the exponent vectors.
Polynomial extend_back(const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const Term& t : f.terms()) {
    std::vector<int> e = t.mono.exponents();
    e.push_back(0);
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(f.field(), f.nvars() + 1, std::move(terms));
}

std::string fresh_var_name(const RingPresentation& ring) {
  if (ring.var_index("w") < 0) return "w";
  for (int k = 0;; ++k) {
    std::string name = "w" + std::to_string(k);
    if (ring.var_index(name) < 0) return name;
  }
}

}  // namespace

Polynomial IdealizationSpec::lift(const Polynomial& f) const {
  return extend_back(f);
}

Ideal IdealizationSpec::lift(const Ideal& ideal) const {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.gens()) gens.push_back(lift(g));
  return Ideal(result, std::move(gens));
}

IdealizationSpec idealize_cyclic(const RingPtr& base, const Ideal& j) {
  if (j.ring()->nvars() != base->nvars() ||
      j.ring()->field() != base->field())
    throw std::invalid_argument("module ideal outside the base ring");
  if (j.plus_relations().contains_one())
    throw std::invalid_argument("module ideal is the unit ideal: M = 0");

  std::vector<std::string> vars = base->var_names();
  vars.push_back(fresh_var_name(*base));
  const int wn = static_cast<int>(vars.size()) - 1;
  const Field& field = base->field();

  std::vector<Polynomial> relations;
  for (const Polynomial& r : base->relations())
    relations.push_back(extend_back(r));
  Polynomial w = Polynomial::variable(field, wn + 1, wn);
  for (const Polynomial& g : j.gens())
    if (!g.is_zero()) relations.push_back(extend_back(g) * w);
  relations.push_back(w * w);

  RingPtr result = make_ring(field, std::move(vars), std::move(relations));
  return IdealizationSpec{base, j, result, wn};
}

SocleSplitResult socle_split_check(const IdealizationSpec& spec,
                                   const Ideal& artinian_quotient) {
  const RingPtr& base = spec.base;

  // Left side: socdim of A/IA in the extended presentation.
  Ideal lifted = spec.lift(artinian_quotient).plus_relations();
  QuotientAlgebra qa = quotient_basis(lifted);
  if (!is_origin_primary(qa))
    throw error("idealization quotient is not origin-primary artinian");
  int lhs = socle_dimension(qa);

  // Right side, inside the artinian base quotient R/I.
  Ideal rbar_ideal = artinian_quotient.plus_relations();
  QuotientAlgebra rbar = quotient_basis(rbar_ideal);
  if (!is_origin_primary(rbar))
    throw error("base quotient is not origin-primary artinian");

  std::vector<Polynomial> mj = artinian_quotient.gens();
  for (const Polynomial& g : spec.module_ideal.gens()) mj.push_back(g);
  int socdim_module =
      socle_dimension(Ideal(base, std::move(mj)).plus_relations());

  // ann(M/IM) = image of J in R/I for the cyclic module M = R/J.
  std::vector<Vec> soc = socle_basis(rbar);
  std::vector<Vec> ann =
      ideal_image_subspace(rbar, spec.module_ideal.gens());
  int overlap = subspace_intersection_dim(base->field(), soc, ann,
                                          rbar.dimension());

  int rhs = socdim_module + overlap;
  return SocleSplitResult{lhs, socdim_module, overlap, rhs, lhs == rhs};
}

IndexShiftResult index_shift_check(const RingPtr& base, const Ideal& q,
                                   const Ideal& j) {
  Ideal q_full = q.plus_relations();
  QuotientAlgebra quo = quotient_basis(q_full);
  if (!is_origin_primary(quo))
    throw error("q is not origin-primary on the base ring");
  if (socle_dimension(quo) != 1)
    throw error("q is not irreducible: socle dimension differs from 1");
  bool outside = false;
  for (const Polynomial& g : j.gens())
    if (!ideal_membership(g, q_full)) {
      outside = true;
      break;
    }
  if (!outside)
    throw error("q contains ann(M); the index shift lemma does not apply");

  std::vector<Polynomial> qm = q.gens();
  for (const Polynomial& g : j.gens()) qm.push_back(g);
  int idx_m = socle_dimension(Ideal(base, std::move(qm)).plus_relations());

  IdealizationSpec spec = idealize_cyclic(base, j);
  int idx_a = socle_dimension(spec.lift(q).plus_relations());

  return IndexShiftResult{idx_a, idx_m, idx_a == idx_m + 1};
}

}  // namespace soclelab
