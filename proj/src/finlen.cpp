#include "soclelab/finlen.hpp"

#include <algorithm>
#include <map>

#include "soclelab/zerodim.hpp"

namespace soclelab {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();
}

int annihilating_power(const Ideal& v, const Ideal& j, int cap) {
  const RingPtr& ring = v.ring();
  Ideal vfull = v.plus_relations();
  Ideal jfull = j.plus_relations();
  const GroebnerBasis& gbj = jfull.groebner();

  std::vector<Polynomial> carriers;
  for (const Polynomial& g : vfull.gens()) {
    Polynomial nf = normal_form(g, gbj);
    if (!nf.is_zero()) carriers.push_back(nf);
  }
  // J <= V, by membership of generators
  Ideal vcheck = vfull;
  for (const Polynomial& g : jfull.gens())
    if (!ideal_membership(g, vcheck))
      throw std::invalid_argument("denominator not contained in numerator");

  for (int n = 0; n <= cap; ++n) {
    bool ok = true;
    for (const Polynomial& g : carriers) {
      for (const Monomial& mu : monomials_of_degree(ring->nvars(), n)) {
        Polynomial prod = g.mul_term(mu, ring->field().one());
        if (!normal_form(prod, gbj).is_zero()) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return n;
  }
  throw cap_exceeded(cap);
}

FiniteLengthModule build_module(const Ideal& v, const Ideal& j, int cap) {
  const RingPtr& ring = v.ring();
  const Field& field = ring->field();
  const int nvars = ring->nvars();
  int ann = annihilating_power(v, j, cap);

  Ideal vfull = v.plus_relations();
  Ideal jfull = j.plus_relations();
  const GroebnerBasis& gbj = jfull.groebner();

  // Spanning set: NF(s * g mod J) for the generators g of V and the standard
  // monomials s of J + m^ann (these have degree < ann, and any other
  // monomial times V lands in J).
  std::vector<Polynomial> zgens = jfull.gens();
  for (const Polynomial& mu : maximal_ideal_power(ring, ann).gens())
    zgens.push_back(mu);
  QuotientAlgebra z = quotient_basis(Ideal(ring, std::move(zgens)));

  std::vector<Polynomial> spanning;
  for (const Polynomial& g : vfull.gens()) {
    for (const Monomial& s : z.staircase) {
      Polynomial w = normal_form(g.mul_term(s, field.one()), gbj);
      if (!w.is_zero()) spanning.push_back(std::move(w));
    }
  }

  // Coordinates are indexed by every monomial occurring in the spanning set;
  // products of basis vectors with variables stay inside this span.
  std::vector<Monomial> support;
  for (const Polynomial& w : spanning)
    for (const Term& t : w.terms()) support.push_back(t.mono);
  std::sort(support.begin(), support.end(),
            [](const Monomial& a, const Monomial& b) {
              return kGrevlex.less(a, b);
            });
  support.erase(std::unique(support.begin(), support.end()), support.end());
  auto coord_index = [&](const Monomial& m) -> int {
    auto it = std::lower_bound(support.begin(), support.end(), m,
                               [](const Monomial& a, const Monomial& b) {
                                 return kGrevlex.less(a, b);
                               });
    if (it != support.end() && *it == m)
      return static_cast<int>(it - support.begin());
    return -1;
  };
  const int ncols = static_cast<int>(support.size());
  auto to_vec = [&](const Polynomial& w) {
    Vec vec(ncols, field.zero());
    for (const Term& t : w.terms()) {
      int idx = coord_index(t.mono);
      if (idx < 0) throw error("module product escaped the spanning support");
      vec[idx] = t.coeff;
    }
    return vec;
  };

  RowSpace space(field, ncols);
  std::vector<Polynomial> basis;
  for (const Polynomial& w : spanning)
    if (space.insert(to_vec(w))) basis.push_back(w);

  FiniteLengthModule mod{ring, vfull, jfull, ann, std::move(basis), {}};
  const int len = mod.length();
  for (int var = 0; var < nvars; ++var) {
    DenseMatrix m(field, len, len);
    for (int col = 0; col < len; ++col) {
      Polynomial prod = normal_form(
          mod.basis_vectors[col].mul_term(Monomial::var(nvars, var),
                                          field.one()),
          gbj);
      if (prod.is_zero()) continue;
      std::optional<Vec> coords = space.express(to_vec(prod));
      if (!coords) throw error("variable action escaped the module span");
      for (int row = 0; row < len; ++row) m.at(row, col) = (*coords)[row];
    }
    mod.action.push_back(std::move(m));
  }
  return mod;
}

int module_length(const FiniteLengthModule& mod) { return mod.length(); }

int module_socle_dim(const FiniteLengthModule& mod) {
  if (mod.length() == 0) return 0;
  DenseMatrix stacked = DenseMatrix::vstack(mod.action);
  return stacked.nullity();
}

}  // namespace soclelab
