#pragma once

#include <stdexcept>
#include <string>

#include "soclelab/monomial.hpp"

namespace soclelab {

// Monomial orders: lex, graded reverse lex, and a block elimination order
// (grevlex on the first b variables, ties broken by grevlex on the rest).
// All are total, multiplicative, and have 1 as the minimum.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  // Eliminates the first `block` variables.
  static MonomialOrder elimination(int block) {
    return MonomialOrder(Kind::Block, block);
  }

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  // Returns <0, 0, >0 as u <, =, > v.
  int compare(const Monomial& u, const Monomial& v) const;

  bool less(const Monomial& u, const Monomial& v) const {
    return compare(u, v) < 0;
  }
  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) > 0;
  }

  std::string name() const;

 private:
  MonomialOrder(Kind k, int b) : kind_(k), block_(b) {}

  Kind kind_;
  int block_;
};

}  // namespace soclelab
