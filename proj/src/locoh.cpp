#include "soclelab/locoh.hpp"

#include <iostream>

namespace soclelab {

namespace {

Ideal defining_ideal(const RingPtr& ring) {
  return Ideal(ring, ring->relations());
}

int ring_dimension(const RingPtr& ring) {
  std::optional<int> d = ideal_dimension(defining_ideal(ring));
  if (!d) throw error("the presentation defines the zero ring");
  return *d;
}

bool contained_in(const Ideal& inner, const Ideal& outer) {
  for (const Polynomial& g : inner.gens())
    if (!ideal_membership(g, outer)) return false;
  return true;
}

}  // namespace

FiniteLengthModule h0_module(const RingPtr& ring, int cap) {
  Ideal ia = defining_ideal(ring);
  SaturationResult sat = saturate(ia, maximal_ideal(ring));
  try {
    return build_module(sat.ideal, ia, cap);
  } catch (const cap_exceeded&) {
    throw error(
        "internal inconsistency: H^0 of a Noetherian local quotient must be "
        "finite length");
  }
}

bool has_positive_depth(const RingPtr& ring) {
  Ideal ia = defining_ideal(ring);
  return ideal_equal(saturate(ia, maximal_ideal(ring)).ideal, ia);
}

PrincipalReduction principal_reduction(const RingPtr& ring, Rng& rng,
                                       int c_cap, int retries) {
  if (ring_dimension(ring) != 1)
    throw std::invalid_argument("principal reduction requires dim A = 1");
  const Field& field = ring->field();
  if (field.is_prime_field() && field.characteristic() < 101)
    std::cerr << "warning: small residue field (p = "
              << field.characteristic()
              << "); principal reduction search may need many retries\n";
  const int n = ring->nvars();
  for (int attempt = 0; attempt < retries; ++attempt) {
    Polynomial x = Polynomial::zero(field, n);
    for (int v = 0; v < n; ++v)
      x = x + ring->var(v).scale(rng.nonzero_coeff(field));
    for (int c = 0; c <= c_cap; ++c) {
      // m^(c+1) = x * m^c as ideals of A
      std::vector<Polynomial> lhs = maximal_ideal_power(ring, c + 1).gens();
      std::vector<Polynomial> rhs;
      for (const Polynomial& mu : maximal_ideal_power(ring, c).gens())
        rhs.push_back(x * mu);
      Ideal left = Ideal(ring, lhs).plus_relations();
      Ideal right = Ideal(ring, rhs).plus_relations();
      if (ideal_equal(left, right)) return PrincipalReduction{x, c};
    }
  }
  throw error("principal reduction not found after " +
              std::to_string(retries) +
              " random elements (field too small or reduction number above "
              "cap " +
              std::to_string(c_cap) + ")");
}

Dim1Certificate dim1_certificate(const RingPtr& ring, Rng& rng) {
  if (ring_dimension(ring) != 1)
    throw std::invalid_argument("dimension-1 certificate requires dim A = 1");
  Ideal ia = defining_ideal(ring);
  Ideal w = saturate(ia, maximal_ideal(ring)).ideal;

  FiniteLengthModule h0 = build_module(w, ia);
  int socdim_ring = module_socle_dim(h0);

  PrincipalReduction red = principal_reduction(ring, rng);

  // least d with m^d n W = 0 in A
  int d = -1;
  for (int cand = 0; cand <= 64; ++cand) {
    Ideal md = Ideal(ring, maximal_ideal_power(ring, cand).gens())
                   .plus_relations();
    Ideal meet = ideal_intersect(md, w);
    if (contained_in(meet, ia)) {
      d = cand;
      break;
    }
  }
  if (d < 0) throw error("m^d n W = 0 did not occur for d <= 64");

  // A/W is Cohen-Macaulay, so the reduction element is a parameter for it
  // and type(A/W) = socdim(A/(W + xA)).
  std::vector<Polynomial> type_gens = w.gens();
  type_gens.push_back(red.element);
  int type_mod_w =
      socle_dimension(Ideal(ring, std::move(type_gens)).plus_relations());

  int ell = std::max(red.c, d) + 1;
  return Dim1Certificate{w,
                         red.c,
                         d,
                         ell,
                         socdim_ring,
                         type_mod_w,
                         socdim_ring + type_mod_w,
                         red.element};
}

bool is_parameter_system(const std::vector<Polynomial>& xs,
                         const RingPtr& ring) {
  if (static_cast<int>(xs.size()) != ring_dimension(ring)) return false;
  Ideal q = Ideal(ring, xs).plus_relations();
  std::optional<int> dim = ideal_dimension(q);
  if (!dim || *dim != 0) return false;
  return is_origin_primary(q);
}

Ideal unmixed_component(const std::vector<Polynomial>& q_without_xi,
                        const Polynomial& xi,
                        const std::vector<Polynomial>& full_system,
                        const RingPtr& ring) {
  if (!is_parameter_system(full_system, ring))
    throw std::invalid_argument("not a parameter system");
  Ideal partial = Ideal(ring, q_without_xi).plus_relations();
  return ideal_colon(partial, xi);
}

int kernel_K_socdim(const std::vector<Polynomial>& q_gens, const RingPtr& ring,
                    int cap) {
  if (!is_parameter_system(q_gens, ring))
    throw std::invalid_argument("not a parameter system");
  const int d = static_cast<int>(q_gens.size());
  std::vector<Polynomial> v_gens;
  for (int i = 0; i < d; ++i) {
    std::vector<Polynomial> others;
    for (int j = 0; j < d; ++j)
      if (j != i) others.push_back(q_gens[j]);
    Ideal ui = ideal_colon(Ideal(ring, others).plus_relations(), q_gens[i]);
    for (const Polynomial& g : ui.gens()) v_gens.push_back(g);
    v_gens.push_back(q_gens[i]);
  }
  Ideal v = Ideal(ring, std::move(v_gens)).plus_relations();
  Ideal j = Ideal(ring, q_gens).plus_relations();
  return module_socle_dim(build_module(v, j, cap));
}

std::optional<int> h1_socdim(const Polynomial& a, const Polynomial& b,
                             const RingPtr& ring, int cap) {
  if (ring_dimension(ring) != 2)
    throw std::invalid_argument("H^1 realization requires dim A = 2");
  if (!is_parameter_system({a, b}, ring))
    throw std::invalid_argument("not a parameter system");
  Ideal colon = ideal_colon(Ideal(ring, {a}).plus_relations(), b);
  std::vector<Polynomial> v_gens = colon.gens();
  v_gens.push_back(b);
  Ideal v = Ideal(ring, std::move(v_gens)).plus_relations();
  Ideal j = Ideal(ring, {b}).plus_relations();
  try {
    return module_socle_dim(build_module(v, j, cap));
  } catch (const cap_exceeded&) {
    return std::nullopt;
  }
}

bool check_weak_sequence(const std::vector<Polynomial>& xs,
                         const RingPtr& ring, int bound) {
  if (!is_parameter_system(xs, ring))
    throw std::invalid_argument("not a parameter system");
  const int d = static_cast<int>(xs.size());
  Ideal q(ring, xs);
  std::vector<int> tuple(d, 1);
  for (;;) {
    for (int i = 0; i < d; ++i) {
      std::vector<Polynomial> base_gens;
      for (int j = 0; j < i; ++j) base_gens.push_back(xs[j].pow(tuple[j]));
      Ideal base = Ideal(ring, base_gens).plus_relations();
      Ideal lhs = ideal_colon(base, xs[i].pow(tuple[i]));
      Ideal rhs = ideal_colon(base, q);
      if (!contained_in(lhs, rhs)) return false;
    }
    int pos = d - 1;
    while (pos >= 0 && tuple[pos] == bound) tuple[pos--] = 1;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return true;
}

int h2_socdim_derived(const std::vector<Polynomial>& q_gens,
                      const RingPtr& ring, int cap) {
  int index = index_of_reducibility(Ideal(ring, q_gens)).index;
  int k = kernel_K_socdim(q_gens, ring, cap);
  if (index < k)
    throw error("index " + std::to_string(index) + " below socdim K " +
                std::to_string(k) +
                ": parameter ideal too shallow for socle surjectivity");
  return index - k;
}

GsWitness gs_lower_bound_witness(const std::vector<Polynomial>& xs,
                                 const RingPtr& ring, int max_exp,
                                 int target) {
  if (!is_parameter_system(xs, ring))
    throw std::invalid_argument("not a parameter system");
  const int d = static_cast<int>(xs.size());
  std::vector<int> exps(d, 1);
  for (;;) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < d; ++i) gens.push_back(xs[i].pow(exps[i]));
    try {
      IndexReport rep = index_of_reducibility(Ideal(ring, gens));
      if (rep.index >= target) return GsWitness{true, exps, rep.index};
    } catch (const error&) {
      // non-origin-primary power system: skip this tuple
    }
    int pos = d - 1;
    while (pos >= 0 && exps[pos] == max_exp) exps[pos--] = 1;
    if (pos < 0) break;
    ++exps[pos];
  }
  return GsWitness{false, {}, 0};
}

Dim2Report dim2_report(const Polynomial& a, const Polynomial& b,
                       const RingPtr& ring, int weak_bound, int cap) {
  std::vector<Polynomial> q_gens{a, b};
  if (!is_parameter_system(q_gens, ring))
    throw std::invalid_argument("not a parameter system");
  Ideal q = Ideal(ring, q_gens).plus_relations();

  Ideal ua = ideal_colon(Ideal(ring, {a}).plus_relations(), b);
  Ideal ub = ideal_colon(Ideal(ring, {b}).plus_relations(), a);

  int index = index_of_reducibility(Ideal(ring, q_gens)).index;
  int socdim_k = kernel_K_socdim(q_gens, ring, cap);
  std::optional<int> h1 = h1_socdim(a, b, ring, cap);
  bool standard = check_weak_sequence(q_gens, ring, weak_bound);

  // (U_a + (b)) n (U_b + (a)) = q and U_a n U_b = (a) n (b), in A
  std::vector<Polynomial> uab = ua.gens();
  uab.push_back(b);
  std::vector<Polynomial> uba = ub.gens();
  uba.push_back(a);
  Ideal lhs = ideal_intersect(Ideal(ring, uab), Ideal(ring, uba));
  bool directness = ideal_equal(lhs.plus_relations(), q);

  Ideal meet_u = ideal_intersect(ua, ub);
  Ideal meet_ab = ideal_intersect(Ideal(ring, {a}).plus_relations(),
                                  Ideal(ring, {b}).plus_relations());
  bool colon_symmetry =
      ideal_equal(meet_u.plus_relations(), meet_ab.plus_relations());

  return Dim2Report{a,
                    b,
                    ua,
                    ub,
                    index,
                    socdim_k,
                    index - socdim_k,
                    h1,
                    standard,
                    weak_bound,
                    directness,
                    colon_symmetry};
}

}  // namespace soclelab
