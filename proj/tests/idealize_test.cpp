#include "doctest.h"
#include "soclelab/idealize.hpp"
#include "support/random_ideals.hpp"
#include "support/test_rings.hpp"

using namespace soclelab;
using testing_rings::ideal;
using testing_rings::poly;

TEST_CASE("idealization presentations") {
  RingPtr r = testing_rings::poly_ring({"x", "y"});
  IdealizationSpec s = idealize_cyclic(r, ideal(r, {"x^2"}));
  CHECK(s.result->nvars() == 3);
  CHECK(s.result->var_names()[2] == "w");
  REQUIRE(s.result->relations().size() == 2);
  CHECK(s.result->relations()[0] ==
        parse_polynomial("x^2*w", *s.result));
  CHECK(s.result->relations()[1] == parse_polynomial("w^2", *s.result));
  CHECK(*ideal_dimension(Ideal(s.result, s.result->relations())) == 2);

  // M = R: only w^2 survives
  RingPtr k1 = testing_rings::poly_ring({"x"});
  IdealizationSpec s0 = idealize_cyclic(k1, Ideal(k1, {}));
  REQUIRE(s0.result->relations().size() == 1);
  CHECK(s0.result->relations()[0] == parse_polynomial("w^2", *s0.result));

  // three-variable base: dimension 3
  RingPtr r3 = testing_rings::poly_ring({"x", "y", "z3"});
  IdealizationSpec s3 = idealize_cyclic(r3, ideal(r3, {"x^2"}));
  CHECK(*ideal_dimension(Ideal(s3.result, s3.result->relations())) == 3);

  // the unit module ideal is refused
  CHECK_THROWS_AS(idealize_cyclic(r, ideal(r, {"1"})), std::invalid_argument);

  // fresh variable name dodges a clash
  RingPtr rw = testing_rings::poly_ring({"x", "w"});
  IdealizationSpec sw = idealize_cyclic(rw, ideal(rw, {"x^2"}));
  CHECK(sw.result->var_names()[2] == "w0");
}

TEST_CASE("socle split on the artinian examples") {
  // R = k[x], J = (x), quotient by (x^2): A = k[x,w]/(x^2, xw, w^2)
  RingPtr r = testing_rings::poly_ring({"x"});
  IdealizationSpec s = idealize_cyclic(r, ideal(r, {"x"}));
  SocleSplitResult split = socle_split_check(s, ideal(r, {"x^2"}));
  CHECK(split.lhs == 2);
  CHECK(split.socdim_module == 1);
  CHECK(split.socdim_ann_overlap == 1);
  CHECK(split.equal);

  // J = 0: ann(M) = 0, so the overlap term vanishes
  IdealizationSpec s0 = idealize_cyclic(r, Ideal(r, {}));
  SocleSplitResult split0 = socle_split_check(s0, ideal(r, {"x^2"}));
  CHECK(split0.lhs == 1);
  CHECK(split0.socdim_ann_overlap == 0);
  CHECK(split0.equal);

  // R-bar = k[x,y]/(x^2, xy, y^2), J = (x)
  RingPtr r2 = testing_rings::poly_ring({"x", "y"});
  IdealizationSpec s2 = idealize_cyclic(r2, ideal(r2, {"x"}));
  SocleSplitResult split2 =
      socle_split_check(s2, ideal(r2, {"x^2", "x*y", "y^2"}));
  CHECK(split2.lhs == 2);
  CHECK(split2.equal);

  CHECK_THROWS_AS(socle_split_check(s2, ideal(r2, {"x"})), error);
}

TEST_CASE("index shift on the example family") {
  RingPtr r = testing_rings::poly_ring({"x", "y"});
  Ideal j = ideal(r, {"x^2"});

  IndexShiftResult a = index_shift_check(r, ideal(r, {"x^3", "y^3"}), j);
  CHECK(a.idx_m == 1);
  CHECK(a.idx_a == 2);
  CHECK(a.equal_plus_one);

  IndexShiftResult b =
      index_shift_check(r, ideal(r, {"(x+y)^3", "x*y^2"}), j);
  CHECK(b.idx_m == 2);
  CHECK(b.idx_a == 3);
  CHECK(b.equal_plus_one);

  RingPtr k1 = testing_rings::poly_ring({"x"});
  IndexShiftResult c =
      index_shift_check(k1, ideal(k1, {"x^3"}), ideal(k1, {"x^2"}));
  CHECK(c.idx_m == 1);
  CHECK(c.idx_a == 2);
  CHECK(c.equal_plus_one);

  // preconditions: q must be irreducible and must not contain ann(M)
  CHECK_THROWS_AS(
      index_shift_check(r, ideal(r, {"x^2", "x*y", "y^2"}), j), error);
  CHECK_THROWS_AS(index_shift_check(r, ideal(r, {"x^2", "y^3"}), j), error);
}

TEST_CASE("quotient compatibility: lengths agree with the reduced base") {
  // idealize(R, J) / I = idealize(R/I, (J+I)/I), compared through lengths
  Rng rng(73);
  RingPtr r = testing_rings::poly_ring({"x", "y"});
  int done = 0;
  for (int t = 0; t < 10; ++t) {
    std::optional<Ideal> i =
        testing_rings::random_origin_primary_ideal(r, rng, 25, 4);
    if (!i) continue;
    Ideal j = ideal(r, {"x^2"});
    IdealizationSpec big = idealize_cyclic(r, j);
    int lhs = colength(big.lift(*i).plus_relations());

    RingPtr quotient_base =
        make_ring(r->field(), r->var_names(), i->gens());
    IdealizationSpec small = idealize_cyclic(
        quotient_base, Ideal(quotient_base, {parse_polynomial(
                           "x^2", *quotient_base)}));
    int rhs =
        colength(Ideal(small.result, {}).plus_relations());
    CHECK(lhs == rhs);
    ++done;
  }
  CHECK(done >= 5);
}

TEST_CASE("random socle splits and index shifts") {
  Rng rng(79);
  RingPtr r = testing_rings::poly_ring({"x", "y"});
  int splits = 0, shifts = 0;
  for (int t = 0; t < 30 && (splits < 12 || shifts < 12); ++t) {
    std::optional<Ideal> i =
        testing_rings::random_origin_primary_ideal(r, rng, 20, 4);
    if (!i) continue;
    // random proper monomial module ideal
    int a = 1 + static_cast<int>(rng.below(3));
    int b = static_cast<int>(rng.below(3));
    std::vector<Polynomial> jg{poly(r, "x").pow(a)};
    if (b > 0) jg.push_back(poly(r, "y").pow(b));
    Ideal j(r, jg);
    if (j.plus_relations().contains_one()) continue;

    if (splits < 12) {
      IdealizationSpec s = idealize_cyclic(r, j);
      SocleSplitResult split = socle_split_check(s, *i);
      CHECK(split.equal);
      ++splits;
    }
    if (shifts < 12) {
      // irreducible q: a power box, guaranteed socle dimension 1
      int p = 2 + static_cast<int>(rng.below(3));
      int q = 2 + static_cast<int>(rng.below(3));
      Ideal box(r, {poly(r, "x").pow(p), poly(r, "y").pow(q)});
      bool contains_ann = true;
      for (const Polynomial& g : j.gens())
        if (!ideal_membership(g, box)) contains_ann = false;
      if (!contains_ann) {
        IndexShiftResult shift = index_shift_check(r, box, j);
        CHECK(shift.equal_plus_one);
        ++shifts;
      }
    }
  }
  CHECK(splits >= 12);
  CHECK(shifts >= 12);
}
