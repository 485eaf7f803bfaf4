#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "soclelab/ring.hpp"

namespace soclelab {

// Reduced Groebner basis under a fixed order: all elements monic, no term of
// any element divisible by the leading monomial of another.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
  std::vector<Monomial> leading;  // leading[i] = LM(elements[i]) under order

  bool is_unit_ideal() const {
    return elements.size() == 1 && elements[0].leading_monomial().is_one();
  }
};

// An ideal of the ambient polynomial ring P of a presentation.  Ideals of
// the quotient A = P/I_A are represented by preimages; callers that work
// A-relatively use plus_relations() first.  The reduced grevlex basis is
// cached; the cache is not synchronized, so do not share one Ideal value
// across concurrently running computations.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const GroebnerBasis& groebner() const;  // grevlex, cached
  GroebnerBasis groebner(const MonomialOrder& ord) const;

  // this + the presentation's defining relations.
  Ideal plus_relations() const;

  bool is_zero() const;
  bool contains_one() const;

  std::string describe() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<const GroebnerBasis> cache_;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, const Field& field,
                         int nvars);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division of f by the divisor list under ord:
// f = sum quotients[i] * divisors[i] + remainder, and no remainder term is
// divisible by any divisor's leading monomial.
DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int k);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
// Colon (I : g) via intersection with the principal ideal and exact division.
Ideal ideal_colon(const Ideal& ideal, const Polynomial& g);
// Colon (I : J) as the intersection of the element colons over J's gens.
Ideal ideal_colon(const Ideal& ideal, const Ideal& j);
bool ideal_equal(const Ideal& a, const Ideal& b);

struct SaturationResult {
  Ideal ideal;
  int exponent;  // colon iterations until the chain stabilized
};
SaturationResult saturate(const Ideal& ideal, const Ideal& j, int cap = 64);

// Krull dimension of P/I; nullopt for the unit ideal (empty variety).
std::optional<int> ideal_dimension(const Ideal& ideal);

// The homogeneous maximal ideal (x_1, ..., x_n) and its powers; the power
// is generated by the monomials of exact degree k.
Ideal maximal_ideal(const RingPtr& ring);
Ideal maximal_ideal_power(const RingPtr& ring, int k);

// All monomials of exact degree k in nvars variables, in canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int k);

}  // namespace soclelab
