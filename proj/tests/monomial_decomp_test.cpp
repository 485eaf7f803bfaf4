#include <algorithm>

#include "doctest.h"
#include "soclelab/monomial_ideal.hpp"
#include "soclelab/zerodim.hpp"
#include "support/random_ideals.hpp"
#include "support/test_rings.hpp"

using namespace soclelab;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

bool same_components(std::vector<MonomialIdeal> a,
                     std::vector<MonomialIdeal> b) {
  if (a.size() != b.size()) return false;
  for (const MonomialIdeal& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("minimal generators") {
  MonomialIdeal i(2, {mono({2, 0}), mono({2, 1}), mono({0, 3}), mono({1, 3})});
  CHECK(i.gens().size() == 2);  // x^2 and y^3 divide the rest
  CHECK(i.contains(mono({2, 1})));
  CHECK_FALSE(i.contains(mono({1, 2})));
}

TEST_CASE("decomposition of the displayed ideal (n = 4, three variables)") {
  // (x^2, x y^3, y^4, z^3) = (x^2, y^3, z^3) n (x, y^4, z^3)
  MonomialIdeal i(3, {mono({2, 0, 0}), mono({1, 3, 0}), mono({0, 4, 0}),
                      mono({0, 0, 3})});
  std::vector<MonomialIdeal> expected{
      MonomialIdeal(3, {mono({2, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3})}),
      MonomialIdeal(3, {mono({1, 0, 0}), mono({0, 4, 0}), mono({0, 0, 3})})};
  std::vector<MonomialIdeal> got = irreducible_decomposition(i);
  CHECK(same_components(got, expected));
  CHECK(verify_irredundant(got, i));
}

TEST_CASE("boxes are already irreducible") {
  MonomialIdeal box(2, {mono({3, 0}), mono({0, 5})});
  std::vector<MonomialIdeal> got = irreducible_decomposition(box);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == box);
  CHECK(verify_irredundant(got, box));
}

TEST_CASE("decomposition of the square of the maximal ideal") {
  MonomialIdeal i(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
  std::vector<MonomialIdeal> expected{
      MonomialIdeal(2, {mono({2, 0}), mono({0, 1})}),
      MonomialIdeal(2, {mono({1, 0}), mono({0, 2})})};
  std::vector<MonomialIdeal> got = irreducible_decomposition(i);
  CHECK(same_components(got, expected));
  CHECK(verify_irredundant(got, i));
}

TEST_CASE("irredundancy detects duplicates and wrong intersections") {
  MonomialIdeal i(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
  std::vector<MonomialIdeal> good = irreducible_decomposition(i);
  std::vector<MonomialIdeal> dup = good;
  dup.push_back(good[0]);
  CHECK_FALSE(verify_irredundant(dup, i));
  std::vector<MonomialIdeal> wrong{good[0]};
  CHECK_FALSE(verify_irredundant(wrong, i));
}

TEST_CASE("non-artinian inputs are rejected") {
  MonomialIdeal i(2, {mono({1, 1})});
  CHECK_FALSE(i.is_artinian());
  CHECK_THROWS_AS(irreducible_decomposition(i), error);
}

TEST_CASE("component count equals the socle dimension, intersection checks "
          "out through the Groebner route") {
  Rng rng(59);
  RingPtr r2 = testing_rings::poly_ring({"x", "y"});
  RingPtr r3 = testing_rings::poly_ring({"x", "y", "z"});
  int done = 0;
  for (int t = 0; t < 110; ++t) {
    const RingPtr& r = (t % 2 == 0) ? r2 : r3;
    MonomialIdeal i(r->nvars(), testing_rings::random_artinian_monomials(
                                    r->nvars(), rng, r->nvars() == 2 ? 5 : 3));
    std::vector<MonomialIdeal> comps = irreducible_decomposition(i);
    CHECK(static_cast<int>(comps.size()) ==
          socle_dimension(i.to_ideal(r)));
    CHECK(verify_irredundant(comps, i));
    for (const MonomialIdeal& c : comps) CHECK(c.is_irreducible());

    // Groebner cross-check of the intersection
    std::optional<Ideal> meet;
    for (const MonomialIdeal& c : comps) {
      Ideal ci = c.to_ideal(r);
      meet = meet ? ideal_intersect(*meet, ci) : ci;
    }
    CHECK(ideal_equal(*meet, i.to_ideal(r)));
    ++done;
  }
  CHECK(done >= 100);
}
