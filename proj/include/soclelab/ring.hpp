#pragma once

#include <memory>
#include <string>
#include <vector>

#include "soclelab/polynomial.hpp"

namespace soclelab {

// A quotient ring A = P/I_A presented by a coefficient field, named
// variables of the ambient polynomial ring P, and defining generators.
// Ideals of A are always represented by their preimages in P; operations
// that are A-relative add the relations first.
class RingPresentation {
 public:
  RingPresentation(Field field, std::vector<std::string> vars,
                   std::vector<Polynomial> relations = {});

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::vector<Polynomial>& relations() const { return relations_; }

  int var_index(const std::string& name) const;  // -1 if absent
  Polynomial var(int i) const {
    return Polynomial::variable(field_, nvars(), i);
  }
  // Generators of the maximal ideal at the origin: the variables.
  std::vector<Polynomial> maximal_ideal_gens() const;

  std::string describe() const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> relations_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

inline RingPtr make_ring(Field field, std::vector<std::string> vars,
                         std::vector<Polynomial> relations = {}) {
  return std::make_shared<const RingPresentation>(
      std::move(field), std::move(vars), std::move(relations));
}

}  // namespace soclelab
