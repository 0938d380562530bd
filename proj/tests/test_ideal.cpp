#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "idealis/construct.hpp"
#include "idealis/dsl.hpp"
#include "oracle.hpp"

using namespace idealis;

namespace {

Ideal ig(const RingPtr& r, std::vector<Elem> g) { return idealGen(r, g); }

using Elems = std::vector<Elem>;

}  // namespace

TEST_CASE("generated ideals") {
  auto z12 = makeZn(12);
  CHECK(ig(z12, {4}).elements() == Elems{0, 4, 8});
  CHECK(ig(z12, {}).elements() == Elems{0});
  CHECK(ig(makeZn(30), {6}).elements() == Elems{0, 6, 12, 18, 24});
  CHECK(ig(z12, {4, 6}).elements() == Elems{0, 2, 4, 6, 8, 10});
  CHECK(ig(z12, {5}).elements().size() == 12);
  auto p = makeProduct(makeZn(4), makeZn(9));
  CHECK(parseIdeal("((2,0),(0,3))", p).size() == 2 * 3);
}

TEST_CASE("ideal arithmetic in Z12") {
  auto z12 = makeZn(12);
  CHECK(idealProduct(ig(z12, {2}), ig(z12, {3})) == ig(z12, {6}));
  const Ideal p = ig(z12, {4});
  CHECK(idealSum(p, zeroIdeal(z12)) == p);
  CHECK(idealIntersect(ig(z12, {4}), ig(z12, {6})).isZero());
  CHECK(idealPower(ig(z12, {2}), 2) == ig(z12, {4}));
  CHECK(scaleIdeal(3, ig(z12, {2})) == ig(z12, {6}));
  CHECK_THROWS_AS(idealSum(p, zeroIdeal(makeZn(12))), Error);
}

TEST_CASE("colon, annihilator and radical") {
  auto z12 = makeZn(12);
  CHECK(colon(ig(z12, {4}), 2).elements() == Elems{0, 2, 4, 6, 8, 10});
  CHECK(annihilator(makeZn(8), 4).elements() == Elems{0, 2, 4, 6});
  const Ideal p = ig(z12, {4});
  CHECK(colon(p, 1) == p);
  CHECK(colonIdeal(p, ig(z12, {2})) == ig(z12, {2}));
  CHECK(annihilator(ig(z12, {4})) == ig(z12, {3}));
  CHECK(radical(ig(z12, {4})) == ig(z12, {2}));
  CHECK(radical(zeroIdeal(makeZn(30))).isZero());
  CHECK(radical(zeroIdeal(z12)) == ig(z12, {6}));
}

TEST_CASE("lattices") {
  CHECK(allIdeals(makeZn(12)).size() == 6);
  CHECK(allIdeals(makeZn(13)).size() == 2);
  auto l2 = makeLocalAlgebra(2);
  const auto lattice = allIdeals(l2);
  std::vector<std::string> labels;
  for (const auto& i : lattice.ideals()) labels.push_back(i.label());
  CHECK(labels == std::vector<std::string>{"(0)", "(x)", "(y)", "(x+y)", "(x,y)", "(1)"});
  CHECK(lattice.coveringEdges().size() == 7);

  const auto z12 = allIdeals(makeZn(12));
  CHECK(z12[0].isZero());
  CHECK_FALSE(z12[z12.size() - 1].isProper());
  CHECK(z12.coveringEdges().size() == 7);
  CHECK(allIdeals(makeZn(2)).coveringEdges().size() == 1);
  CHECK(z12.properIndices().size() == 5);

  Limits tiny;
  tiny.lattice_cap = 3;
  CHECK_THROWS_AS(allIdeals(makeZn(12), tiny), Error);
}

TEST_CASE("allIdeals(Z_n) has d(n) members for n <= 200") {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(allIdeals(makeZn(n)).size() == oracle::divisorCount(n));
  }
}

TEST_CASE("jacobson, maximal ideals, reduced, quasi-local") {
  auto z8 = makeZn(8);
  CHECK(jacobson(z8) == ig(z8, {2}));
  CHECK(jacobson(makeProduct(makeZn(2), makeZn(3))).isZero());
  CHECK_FALSE(isQuasiLocal(makeZn(12)));
  CHECK(isQuasiLocal(makeZn(27)));
  const auto maxes = maximalIdeals(allIdeals(makeZn(12)));
  REQUIRE(maxes.size() == 2);
  CHECK(maxes[0].elements() == ig(makeZn(12), {3}).elements());
  CHECK(isReduced(makeZn(30)));
  CHECK_FALSE(isReduced(makeZn(12)));
}

TEST_CASE("homomorphic images and preimages") {
  auto z12 = makeZn(12);
  auto q = makeQuotient(z12, ig(z12, {4}));
  const Ideal img = imageIdeal(q.map, ig(z12, {2}));
  CHECK(img.size() == 2);
  CHECK(preimageIdeal(q.map, img) == ig(z12, {2}));
  CHECK(preimageIdeal(q.map, zeroIdeal(q.ring)) == ig(z12, {4}));
}

TEST_CASE("property: lattice equals the subset oracle on small rings") {
  gen::Gen g;
  for (int i = 0; i < 60; ++i) {
    RingPtr r = g.ring(16);
    CAPTURE(printExpr(r->provenance()));
    const auto lattice = allIdeals(r);
    const auto expected = oracle::idealsBySubsets(*r);
    REQUIRE(lattice.size() == expected.size());
    for (std::size_t k = 0; k < lattice.size(); ++k) CHECK(lattice[k].elements() == expected[k]);
  }
}

TEST_CASE("property: the lattice is closed under the ideal operations") {
  gen::Gen g;
  for (int round = 0; round < 40; ++round) {
    RingPtr r = g.ring(32);
    CAPTURE(printExpr(r->provenance()));
    const auto lattice = allIdeals(r);
    const auto n = lattice.size();
    for (std::size_t t = 0; t < 30; ++t) {
      const Ideal& a = lattice[g.below(n)];
      const Ideal& b = lattice[g.below(n)];
      const Elem x = g.element(r);
      CHECK(oracle::isIdeal(*r, oracle::maskOf(*r, a.elements())));
      CHECK(lattice.indexOf(idealSum(a, b)));
      CHECK(lattice.indexOf(idealProduct(a, b)));
      CHECK(lattice.indexOf(idealIntersect(a, b)));
      CHECK(lattice.indexOf(colon(a, x)));
      CHECK(lattice.indexOf(colonIdeal(a, b)));
      CHECK(lattice.indexOf(annihilator(r, x)));
      CHECK(lattice.indexOf(radical(a)));
      CHECK(idealProduct(a, b).isSubsetOf(idealIntersect(a, b)));
      CHECK(radical(radical(a)) == radical(a));
      CHECK(radical(idealIntersect(a, b)) == idealIntersect(radical(a), radical(b)));
      // The generator list reproduces the element set.
      CHECK(idealGen(r, a.generators()) == a);
    }
    // Maximal ideals are exactly the proper ideals below nothing proper.
    for (std::size_t i = 0; i + 1 < n; ++i) {
      bool covered = false;
      for (std::size_t j = 0; j + 1 < n; ++j) covered |= i != j && lattice.contains(i, j);
      const auto& maxes = lattice.maximalIndices();
      CHECK((std::find(maxes.begin(), maxes.end(), i) != maxes.end()) == !covered);
    }
    // Covering edges: strict containment with nothing in between.
    for (const auto& [lo, hi] : lattice.coveringEdges()) {
      CHECK(lattice.contains(lo, hi));
      for (std::size_t k = 0; k < n; ++k) {
        CHECK_FALSE((k != lo && k != hi && lattice.contains(lo, k) && lattice.contains(k, hi)));
      }
    }
  }
}

TEST_CASE("property: powers of the Jacobson radical stabilize, and vanish in quasi-local rings") {
  gen::Gen g;
  for (int round = 0; round < 40; ++round) {
    RingPtr r = g.ring(32);
    const auto lattice = allIdeals(r);
    const Ideal jac = jacobson(lattice);
    Ideal power = jac;
    for (std::size_t k = 0; k < r->size(); ++k) power = idealProduct(power, jac);
    CHECK(idealProduct(power, power) == power);
    if (isQuasiLocal(lattice)) CHECK(power.isZero());
  }
}
