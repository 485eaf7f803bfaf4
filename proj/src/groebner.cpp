#include "soclelab/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <utility>

namespace soclelab {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

// Engine-internal polynomial: terms sorted descending under the active order.
using ETerms = std::vector<Term>;

ETerms to_engine(const Polynomial& f, const MonomialOrder& ord) {
  ETerms t = f.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  return t;
}

Polynomial from_engine(ETerms t, const Field& field, int nvars) {
  return Polynomial(field, nvars, std::move(t));
}

// r = f - c * (m * g), both sorted descending under ord, starting at f[from].
ETerms axpy(const ETerms& f, size_t from, const Coeff& c, const Monomial& m,
            const ETerms& g, const MonomialOrder& ord, const Field& field) {
  ETerms out;
  out.reserve(f.size() - from + g.size());
  size_t i = from, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int cmp = ord.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), field.neg(field.mul(c, g[j].coeff))});
      ++j;
    } else {
      Coeff s = field.sub(f[i].coeff, field.mul(c, g[j].coeff));
      if (!field.is_zero(s)) out.push_back(Term{f[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j)
    out.push_back(
        Term{g[j].mono * m, field.neg(field.mul(c, g[j].coeff))});
  return out;
}

struct EngineBasis {
  std::vector<ETerms> polys;  // monic
  std::vector<Monomial> lead;
};

// Full reduction of f modulo the basis; optionally tracks quotients.
ETerms reduce_full(ETerms f, const EngineBasis& basis, const MonomialOrder& ord,
                   const Field& field,
                   std::vector<ETerms>* quotients = nullptr) {
  ETerms remainder;
  size_t head = 0;
  while (head < f.size()) {
    const Monomial& lm = f[head].mono;
    int div = -1;
    for (size_t k = 0; k < basis.lead.size(); ++k) {
      if (basis.lead[k].divides(lm)) {
        div = static_cast<int>(k);
        break;
      }
    }
    if (div < 0) {
      remainder.push_back(f[head]);
      ++head;
      continue;
    }
    Monomial shift = lm / basis.lead[div];
    Coeff c = f[head].coeff;  // basis polys are monic
    if (quotients)
      (*quotients)[div].push_back(Term{shift, c});
    f = axpy(f, head, c, shift, basis.polys[div], ord, field);
    head = 0;
  }
  return remainder;
}

struct Pair {
  int i, j;
  Monomial lcm;
  bool coprime;
};

// Buchberger with normal pair selection and the two classic elimination
// criteria.  The chain criterion cites a third element k only when both
// associated pairs have already left the queue.
EngineBasis buchberger_engine(const std::vector<Polynomial>& gens,
                              const MonomialOrder& ord, const Field& field) {
  EngineBasis basis;
  std::vector<Pair> pending;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Pair p{i, j, basis.lead[i].lcm(basis.lead[j]),
             basis.lead[i].coprime(basis.lead[j])};
      pending.push_back(std::move(p));
    }
  };

  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    ETerms e = to_engine(g.monic(), ord);
    // interreduce the input against what we have so far
    e = reduce_full(std::move(e), basis, ord, field);
    if (e.empty()) continue;
    Coeff inv = field.inv(e.front().coeff);
    for (Term& t : e) t.coeff = field.mul(t.coeff, inv);
    basis.lead.push_back(e.front().mono);
    basis.polys.push_back(std::move(e));
    push_pairs_for(static_cast<int>(basis.polys.size()) - 1);
  }

  auto in_queue = [&](int a, int b) {
    for (const Pair& p : pending)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  while (!pending.empty()) {
    // normal strategy: smallest lcm; ties by index for determinism
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      int c = ord.compare(pending[k].lcm, pending[best].lcm);
      if (c < 0 || (c == 0 && (pending[k].j < pending[best].j ||
                               (pending[k].j == pending[best].j &&
                                pending[k].i < pending[best].i))))
        best = k;
    }
    Pair pr = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<long>(best));

    if (pr.coprime) continue;  // first criterion
    bool chained = false;      // second (chain) criterion
    for (size_t k = 0; k < basis.lead.size() && !chained; ++k) {
      if (static_cast<int>(k) == pr.i || static_cast<int>(k) == pr.j) continue;
      if (basis.lead[k].divides(pr.lcm) &&
          !in_queue(pr.i, static_cast<int>(k)) &&
          !in_queue(pr.j, static_cast<int>(k)))
        chained = true;
    }
    if (chained) continue;

    // S-polynomial of two monic elements
    const ETerms& fi = basis.polys[pr.i];
    const ETerms& fj = basis.polys[pr.j];
    ETerms lhs;
    lhs.reserve(fi.size());
    Monomial mi = pr.lcm / basis.lead[pr.i];
    for (const Term& t : fi) lhs.push_back(Term{t.mono * mi, t.coeff});
    ETerms s =
        axpy(lhs, 0, field.one(), pr.lcm / basis.lead[pr.j], fj, ord, field);

    ETerms h = reduce_full(std::move(s), basis, ord, field);
    if (h.empty()) continue;
    Coeff inv = field.inv(h.front().coeff);
    for (Term& t : h) t.coeff = field.mul(t.coeff, inv);
    basis.lead.push_back(h.front().mono);
    basis.polys.push_back(std::move(h));
    push_pairs_for(static_cast<int>(basis.polys.size()) - 1);
  }
  return basis;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, const Field& field,
                         int nvars) {
  EngineBasis eng = buchberger_engine(gens, ord, field);

  // Minimalize: drop elements whose leading monomial is divisible by that of
  // another kept element.
  std::vector<int> keep;
  for (size_t i = 0; i < eng.lead.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < eng.lead.size() && !redundant; ++j) {
      if (i == j) continue;
      if (eng.lead[j].divides(eng.lead[i])) {
        if (eng.lead[j] != eng.lead[i])
          redundant = true;
        else if (j < i)  // equal leading monomials: keep the first
          redundant = true;
      }
    }
    if (!redundant) keep.push_back(static_cast<int>(i));
  }

  // Tail-reduce each kept element against the others.
  EngineBasis minimal;
  for (int i : keep) {
    minimal.polys.push_back(eng.polys[i]);
    minimal.lead.push_back(eng.lead[i]);
  }
  GroebnerBasis out{ord, {}, {}};
  for (size_t i = 0; i < minimal.polys.size(); ++i) {
    EngineBasis others;
    for (size_t j = 0; j < minimal.polys.size(); ++j) {
      if (j == i) continue;
      others.polys.push_back(minimal.polys[j]);
      others.lead.push_back(minimal.lead[j]);
    }
    ETerms r = reduce_full(minimal.polys[i], others, ord, field);
    assert(!r.empty() && r.front().mono == minimal.lead[i]);
    out.elements.push_back(from_engine(std::move(r), field, nvars));
    out.leading.push_back(minimal.lead[i]);
  }

  // Deterministic presentation: sort by leading monomial, descending.
  std::vector<size_t> idx(out.elements.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return ord.greater(out.leading[a], out.leading[b]);
  });
  GroebnerBasis sorted{ord, {}, {}};
  for (size_t i : idx) {
    sorted.elements.push_back(std::move(out.elements[i]));
    sorted.leading.push_back(std::move(out.leading[i]));
  }
  return sorted;
}

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord) {
  const Field& field = f.field();
  EngineBasis basis;
  std::vector<Coeff> lead_coeffs;
  for (const Polynomial& d : divisors) {
    if (d.is_zero()) throw error("division by a zero polynomial");
    ETerms e = to_engine(d, ord);
    lead_coeffs.push_back(e.front().coeff);
    Coeff inv = field.inv(e.front().coeff);
    for (Term& t : e) t.coeff = field.mul(t.coeff, inv);
    basis.lead.push_back(e.front().mono);
    basis.polys.push_back(std::move(e));
  }
  std::vector<ETerms> quotients(divisors.size());
  ETerms r = reduce_full(to_engine(f, ord), basis, ord, field, &quotients);
  DivisionResult res{{}, from_engine(std::move(r), field, f.nvars())};
  for (size_t i = 0; i < divisors.size(); ++i) {
    // we divided by the monic divisor; rescale the quotient
    Coeff inv = field.inv(lead_coeffs[i]);
    for (Term& t : quotients[i]) t.coeff = field.mul(t.coeff, inv);
    res.quotients.push_back(
        from_engine(std::move(quotients[i]), field, f.nvars()));
  }
  return res;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.elements.empty()) return f;
  const Field& field = f.field();
  EngineBasis basis;
  for (size_t i = 0; i < gb.elements.size(); ++i) {
    basis.polys.push_back(to_engine(gb.elements[i], gb.order));
    basis.lead.push_back(gb.leading[i]);
  }
  ETerms r = reduce_full(to_engine(f, gb.order), basis, gb.order, field);
  return from_engine(std::move(r), field, f.nvars());
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const Polynomial& g : gens_)
    if (g.nvars() != ring_->nvars() || g.field() != ring_->field())
      throw std::invalid_argument("generator outside the ambient ring");
}

const GroebnerBasis& Ideal::groebner() const {
  if (!cache_)
    cache_ = std::make_shared<const GroebnerBasis>(
        buchberger(gens_, kGrevlex, ring_->field(), ring_->nvars()));
  return *cache_;
}

GroebnerBasis Ideal::groebner(const MonomialOrder& ord) const {
  if (ord.kind() == MonomialOrder::Kind::GrevLex) return groebner();
  return buchberger(gens_, ord, ring_->field(), ring_->nvars());
}

Ideal Ideal::plus_relations() const {
  std::vector<Polynomial> gens = gens_;
  for (const Polynomial& r : ring_->relations()) gens.push_back(r);
  return Ideal(ring_, std::move(gens));
}

bool Ideal::is_zero() const { return groebner().elements.empty(); }

bool Ideal::contains_one() const { return groebner().is_unit_ideal(); }

std::string Ideal::describe() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens_.size(); ++i)
    os << (i ? ", " : "") << gens_[i].to_string(ring_->var_names());
  os << ")";
  return os.str();
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  return normal_form(f, ideal.groebner()).is_zero();
}

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring()->field() != b.ring()->field() ||
      a.ring()->nvars() != b.ring()->nvars())
    throw std::invalid_argument("ideal operation across different rings");
}

// Shift a polynomial into the ring with one auxiliary variable prepended.
Polynomial extend_front(const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const Term& t : f.terms()) {
    std::vector<int> e;
    e.reserve(t.mono.nvars() + 1);
    e.push_back(0);
    for (int i = 0; i < t.mono.nvars(); ++i) e.push_back(t.mono[i]);
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(f.field(), f.nvars() + 1, std::move(terms));
}

Polynomial restrict_front(const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const Term& t : f.terms()) {
    assert(t.mono[0] == 0);
    std::vector<int> e(t.mono.exponents().begin() + 1,
                       t.mono.exponents().end());
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(f.field(), f.nvars() - 1, std::move(terms));
}

bool uses_front(const Polynomial& f) {
  for (const Term& t : f.terms())
    if (t.mono[0] != 0) return true;
  return false;
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.gens();
  for (const Polynomial& g : b.gens()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens())
    for (const Polynomial& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int k) {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  Ideal acc(a.ring(), {Polynomial::constant(a.ring()->field(),
                                            a.ring()->nvars(),
                                            a.ring()->field().one())});
  for (int i = 0; i < k; ++i) acc = ideal_product(acc, a);
  return acc;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const Field& field = a.ring()->field();
  const int n = a.ring()->nvars();
  // t*I + (1-t)*J in k[t, x...]; eliminating t leaves I n J.
  Polynomial t = Polynomial::variable(field, n + 1, 0);
  Polynomial one_minus_t =
      Polynomial::constant(field, n + 1, field.one()) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens()) gens.push_back(t * extend_front(f));
  for (const Polynomial& g : b.gens())
    gens.push_back(one_minus_t * extend_front(g));
  GroebnerBasis gb =
      buchberger(gens, MonomialOrder::elimination(1), field, n + 1);
  std::vector<Polynomial> result;
  for (const Polynomial& e : gb.elements)
    if (!uses_front(e)) result.push_back(restrict_front(e));
  return Ideal(a.ring(), std::move(result));
}

Ideal ideal_colon(const Ideal& ideal, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("colon by zero");
  Ideal principal(ideal.ring(), {g});
  Ideal meet = ideal_intersect(ideal, principal);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : meet.gens()) {
    DivisionResult d = divide(f, {g}, kGrevlex);
    assert(d.remainder.is_zero());
    gens.push_back(d.quotients[0]);
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& ideal, const Ideal& j) {
  check_same_ring(ideal, j);
  std::vector<Polynomial> nonzero;
  for (const Polynomial& g : j.gens())
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) throw std::invalid_argument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const Polynomial& g : nonzero) {
    Ideal c = ideal_colon(ideal, g);
    acc = acc ? ideal_intersect(*acc, c) : c;
  }
  return *acc;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const GroebnerBasis& ga = a.groebner();
  const GroebnerBasis& gb = b.groebner();
  if (ga.elements.size() != gb.elements.size()) return false;
  for (size_t i = 0; i < ga.elements.size(); ++i)
    if (ga.elements[i] != gb.elements[i]) return false;
  return true;
}

SaturationResult saturate(const Ideal& ideal, const Ideal& j, int cap) {
  Ideal prev = ideal;
  for (int iter = 1; iter <= cap; ++iter) {
    Ideal next = ideal_colon(prev, j);
    if (ideal_equal(next, prev)) return SaturationResult{next, iter};
    prev = next;
  }
  throw error("saturation did not stabilize within " + std::to_string(cap) +
              " iterations");
}

std::optional<int> ideal_dimension(const Ideal& ideal) {
  const GroebnerBasis& gb = ideal.groebner();
  if (gb.is_unit_ideal()) return std::nullopt;
  const int n = ideal.ring()->nvars();
  // dim P/I = dim P/LT(I) = size of the largest variable set S such that no
  // leading monomial is supported inside S.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& lm : gb.leading) {
      bool inside = true;
      for (int v = 0; v < n && inside; ++v)
        if (lm[v] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

Ideal maximal_ideal(const RingPtr& ring) {
  return Ideal(ring, ring->maximal_ideal_gens());
}

std::vector<Monomial> monomials_of_degree(int nvars, int k) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  // lexicographic enumeration of compositions of k into nvars parts
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars - 1) {
      e[pos] = left;
      out.push_back(Monomial(e));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (nvars == 0) return out;
  rec(0, k);
  return out;
}

Ideal maximal_ideal_power(const RingPtr& ring, int k) {
  if (k == 0)
    return Ideal(ring, {Polynomial::constant(ring->field(), ring->nvars(),
                                             ring->field().one())});
  std::vector<Polynomial> gens;
  for (const Monomial& m : monomials_of_degree(ring->nvars(), k))
    gens.push_back(Polynomial::monomial(ring->field(), m,
                                        ring->field().one()));
  return Ideal(ring, std::move(gens));
}

}  // namespace soclelab
