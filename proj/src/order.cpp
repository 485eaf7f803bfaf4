#include "soclelab/order.hpp"

namespace soclelab {

namespace {

// Grevlex on the exponent range [lo, hi).
int grevlex_range(const Monomial& u, const Monomial& v, int lo, int hi) {
  int du = 0, dv = 0;
  for (int i = lo; i < hi; ++i) {
    du += u[i];
    dv += v[i];
  }
  if (du != dv) return du < dv ? -1 : 1;
  // Equal degree: the monomial with the smaller last differing exponent wins.
  for (int i = hi - 1; i >= lo; --i) {
    if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.nvars() != v.nvars())
    throw std::invalid_argument("monomial comparison across different rings");
  const int n = u.nvars();
  switch (kind_) {
    case Kind::Lex:
      for (int i = 0; i < n; ++i)
        if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
      return 0;
    case Kind::GrevLex:
      return grevlex_range(u, v, 0, n);
    case Kind::Block: {
      int c = grevlex_range(u, v, 0, block_);
      if (c != 0) return c;
      return grevlex_range(u, v, block_, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Block:
      return "elim" + std::to_string(block_);
  }
  return "?";
}

}  // namespace soclelab
