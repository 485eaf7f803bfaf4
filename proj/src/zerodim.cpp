#include "soclelab/zerodim.hpp"

#include <algorithm>
#include <functional>

namespace soclelab {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();
}

int QuotientAlgebra::staircase_index(const Monomial& m) const {
  auto it = std::lower_bound(
      staircase.begin(), staircase.end(), m,
      [](const Monomial& a, const Monomial& b) { return kGrevlex.less(a, b); });
  if (it != staircase.end() && *it == m)
    return static_cast<int>(it - staircase.begin());
  return -1;
}

Vec QuotientAlgebra::coordinates(const Polynomial& f) const {
  const Field& field = ring->field();
  Polynomial nf = normal_form(f, gb);
  Vec v(staircase.size(), field.zero());
  for (const Term& t : nf.terms()) {
    int idx = staircase_index(t.mono);
    if (idx < 0) throw error("normal form left the staircase");
    v[idx] = t.coeff;
  }
  return v;
}

QuotientAlgebra quotient_basis(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const Field& field = ring->field();
  const int n = ring->nvars();
  GroebnerBasis gb = ideal.groebner();

  std::vector<Monomial> staircase;
  if (!gb.is_unit_ideal()) {
    // Finite staircase forces a pure power of each variable among the
    // leading monomials.
    std::vector<int> bound(n, -1);
    for (const Monomial& lm : gb.leading) {
      int support = -1, vars_used = 0;
      for (int v = 0; v < n; ++v)
        if (lm[v] > 0) {
          support = v;
          ++vars_used;
        }
      if (vars_used == 1 && (bound[support] < 0 || lm[support] < bound[support]))
        bound[support] = lm[support];
      if (vars_used == 0) bound.assign(n, 0);  // unit ideal, defensive
    }
    for (int v = 0; v < n; ++v)
      if (bound[v] < 0)
        throw error("ideal is not zero-dimensional: no pure power of " +
                    ring->var_names()[v] + " in the leading term ideal");

    std::vector<int> e(n, 0);
    std::function<void(int)> walk = [&](int pos) {
      if (pos == n) {
        Monomial m(e);
        for (const Monomial& lm : gb.leading)
          if (lm.divides(m)) return;
        staircase.push_back(std::move(m));
        return;
      }
      for (int v = 0; v < bound[pos]; ++v) {
        e[pos] = v;
        walk(pos + 1);
      }
      e[pos] = 0;
    };
    walk(0);
    std::sort(staircase.begin(), staircase.end(),
              [](const Monomial& a, const Monomial& b) {
                return kGrevlex.less(a, b);
              });
  }

  QuotientAlgebra q{ring, ideal, std::move(gb), std::move(staircase), {}};
  const int d = q.dimension();
  for (int v = 0; v < n; ++v) {
    DenseMatrix m(field, d, d);
    for (int j = 0; j < d; ++j) {
      Monomial prod = q.staircase[j] * Monomial::var(n, v);
      int idx = q.staircase_index(prod);
      if (idx >= 0) {
        m.at(idx, j) = field.one();
      } else {
        Polynomial nf = normal_form(
            Polynomial::monomial(field, prod, field.one()), q.gb);
        for (const Term& t : nf.terms()) {
          int k = q.staircase_index(t.mono);
          if (k < 0) throw error("normal form left the staircase");
          m.at(k, j) = t.coeff;
        }
      }
    }
    q.mult.push_back(std::move(m));
  }
  return q;
}

int colength(const QuotientAlgebra& q) { return q.dimension(); }

int colength(const Ideal& ideal) { return quotient_basis(ideal).dimension(); }

bool is_origin_primary(const QuotientAlgebra& q) {
  const Field& field = q.ring->field();
  const int d = q.dimension();
  if (d == 0) return true;
  for (const DenseMatrix& m : q.mult) {
    // x_v^D = 0 on the quotient iff M_v^D kills the class of 1
    // and every other basis vector; nilpotency of the commuting family is
    // equivalent to M_v^D = 0, checked column by column with early exit.
    bool nilpotent = true;
    for (int j = 0; j < d && nilpotent; ++j) {
      Vec v(d, field.zero());
      v[j] = field.one();
      for (int step = 0; step < d; ++step) {
        v = m.apply(v);
        bool zero = true;
        for (const Coeff& c : v)
          if (!field.is_zero(c)) {
            zero = false;
            break;
          }
        if (zero) break;
      }
      for (const Coeff& c : v)
        if (!field.is_zero(c)) {
          nilpotent = false;
          break;
        }
    }
    if (!nilpotent) return false;
  }
  return true;
}

bool is_origin_primary(const Ideal& ideal) {
  return is_origin_primary(quotient_basis(ideal));
}

std::vector<Vec> socle_basis(const QuotientAlgebra& q) {
  if (q.dimension() == 0) return {};
  DenseMatrix stacked = DenseMatrix::vstack(q.mult);
  return stacked.nullspace_basis();
}

std::vector<Vec> ideal_image_subspace(const QuotientAlgebra& q,
                                      const std::vector<Polynomial>& gens) {
  const Field& field = q.ring->field();
  const int d = q.dimension();
  RowSpace space(field, d);
  std::vector<Vec> spanning;
  std::vector<Vec> frontier;
  for (const Polynomial& g : gens) {
    Vec v = q.coordinates(g);
    if (space.insert(v)) {
      spanning.push_back(v);
      frontier.push_back(std::move(v));
    }
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier)
      for (const DenseMatrix& m : q.mult) {
        Vec w = m.apply(v);
        if (space.insert(w)) {
          spanning.push_back(w);
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return spanning;
}

int socle_dimension(const QuotientAlgebra& q) {
  if (q.dimension() == 0) return 0;
  if (!is_origin_primary(q))
    throw error("socle of a non-origin-primary artinian quotient refused");
  DenseMatrix stacked = DenseMatrix::vstack(q.mult);
  int via_kernel = stacked.nullity();

  // Independent route: soc(P/I) = (I : m)/I, a colength difference.
  Ideal colon = ideal_colon(q.ideal, maximal_ideal(q.ring));
  int via_colon = q.dimension() - colength(colon);
  if (via_kernel != via_colon)
    throw error("socle routes disagree: kernel " + std::to_string(via_kernel) +
                " vs colon " + std::to_string(via_colon));
  return via_kernel;
}

int socle_dimension(const Ideal& ideal) {
  return socle_dimension(quotient_basis(ideal));
}

IndexReport index_of_reducibility(const Ideal& q) {
  Ideal full = q.plus_relations();
  QuotientAlgebra quo = quotient_basis(full);
  if (!is_origin_primary(quo))
    throw error("ideal is cofinite but not origin-primary; resample");
  Ideal defining(q.ring(), q.ring()->relations());
  std::optional<int> dim_a = ideal_dimension(defining);
  bool parameter = dim_a.has_value() &&
                   static_cast<int>(q.gens().size()) == *dim_a;
  return IndexReport{socle_dimension(quo), parameter};
}

}  // namespace soclelab
