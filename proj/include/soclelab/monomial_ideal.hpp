#pragma once

#include <vector>

#include "soclelab/groebner.hpp"

namespace soclelab {

// A monomial ideal, stored by its unique minimal generating set.
class MonomialIdeal {
 public:
  MonomialIdeal(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool contains(const Monomial& m) const;
  // Artinian: every variable appears as a pure power among the generators.
  bool is_artinian() const;
  // Irreducible: generated by pure variable powers, one per variable.
  bool is_irreducible() const;

  bool operator==(const MonomialIdeal& o) const {
    return nvars_ == o.nvars_ && gens_ == o.gens_;
  }

  Ideal to_ideal(const RingPtr& ring) const;
  std::string describe(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal monomial_intersect(const MonomialIdeal& a,
                                 const MonomialIdeal& b);

// Irredundant decomposition of an artinian monomial ideal into irreducible
// monomial ideals, one component per socle monomial of P/I.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i);

// True iff the intersection of the components equals the ideal and dropping
// any single component strictly enlarges the intersection.
bool verify_irredundant(const std::vector<MonomialIdeal>& components,
                        const MonomialIdeal& i);

// Standard monomials of an artinian monomial ideal (finite staircase).
std::vector<Monomial> monomial_staircase(const MonomialIdeal& i);

}  // namespace soclelab
