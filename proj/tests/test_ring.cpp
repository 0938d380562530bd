#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "gen.hpp"
#include "idealis/construct.hpp"
#include "idealis/dsl.hpp"
#include "oracle.hpp"

using namespace idealis;

namespace {

std::string kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return toString(e.kind());
  }
  return "no error";
}

bool isomorphic(const RingPtr& a, const RingPtr& b) { return isomorphismSearch(a, b).has_value(); }

}  // namespace

TEST_CASE("Z_n units and small identities") {
  CHECK(makeZn(12)->units() == std::vector<Elem>{1, 5, 7, 11});
  CHECK(makeZn(2)->units() == std::vector<Elem>{1});
  auto z6 = makeZn(6);
  CHECK(z6->mul(z6->mul(2, 2), 3) == 0);
  CHECK_FALSE(z6->isUnit(0));
  CHECK(makeZn(4)->nonunits() == std::vector<Elem>{0, 2});
  for (std::uint64_t n = 2; n <= 100; ++n) {
    CAPTURE(n);
    CHECK(makeZn(n)->units() == oracle::gcdUnits(n));
  }
}

TEST_CASE("products") {
  auto z2 = makeZn(2), z3 = makeZn(3);
  CHECK(isomorphic(makeProduct(z2, z3), makeZn(6)));
  auto v4 = makeProduct(z2, z2);
  CHECK(v4->size() == 4);
  CHECK(v4->units() == std::vector<Elem>{3});
  CHECK(makeProduct(z2, makeProduct(z2, z2))->size() == 8);
  auto p = makeProduct(makeZn(4), makeZn(3));
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      CHECK(p->isUnit(a * 3 + b) == (a % 2 == 1 && b != 0));
    }
  }
}

TEST_CASE("quotients") {
  auto z12 = makeZn(12);
  auto q = makeQuotient(z12, idealGen(z12, std::vector<Elem>{4}));
  CHECK(q.ring->size() == 4);
  CHECK(isomorphic(q.ring, makeZn(4)));
  CHECK(isomorphic(makeQuotient(z12, zeroIdeal(z12)).ring, z12));
  auto z8 = makeZn(8);
  auto f2 = makeQuotient(z8, idealGen(z8, std::vector<Elem>{2})).ring;
  CHECK(f2->size() == 2);
  CHECK(f2->isField());
  // The least index of each coset represents it.
  CHECK(q.ring->structure().rep == std::vector<Elem>{0, 1, 2, 3});
  CHECK(kindOf([&] { makeQuotient(z12, wholeRing(z12)); }) == std::string("InvalidArgument"));
}

TEST_CASE("projection kernels equal the quotienting ideal") {
  gen::Gen g;
  for (int i = 0; i < 60; ++i) {
    RingPtr r = g.ring(24);
    Ideal q = g.properIdeal(r);
    auto d = makeQuotient(r, q);
    CHECK(d.map.kernel() == q.elements());
    CHECK(d.map.isSurjective());
    CHECK(oracle::ringAxioms(*d.ring));
  }
}

TEST_CASE("localizations") {
  auto z12 = makeZn(12);
  auto loc = makeLocalization(z12, std::vector<Elem>{1, 3, 9});
  CHECK(loc.ring->size() == 4);
  CHECK(isomorphic(loc.ring, makeZn(4)));
  CHECK(loc.map.kernel() == std::vector<Elem>{0, 4, 8});
  CHECK(isomorphic(makeLocalization(z12, std::vector<Elem>{1}).ring, z12));
  CHECK(isomorphic(makeLocalization(makeZn(6), std::vector<Elem>{1, 2, 4}).ring, makeZn(3)));

  CHECK(kindOf([&] { makeLocalization(z12, std::vector<Elem>{1, 2}); }) == std::string("NotMultClosed"));
  CHECK(kindOf([&] { makeLocalization(z12, std::vector<Elem>{3, 9}); }) == std::string("NotMultClosed"));
  CHECK(kindOf([&] { makeLocalization(z12, std::vector<Elem>{0, 1}); }) == std::string("ZeroInS"));
}

TEST_CASE("localization matches the pair-class oracle") {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    auto r = makeZn(n);
    for (Elem s = 0; s < n; ++s) {
      const auto set = gen::Gen::cyclicSet(r, s);
      if (set.empty()) continue;
      CAPTURE(n);
      CAPTURE(s);
      auto loc = makeLocalization(r, set);
      CHECK(loc.ring->size() == oracle::localizationSize(*r, set));
      for (Elem t : set) CHECK(loc.ring->isUnit(loc.map(t)));
      std::vector<Elem> killed;
      for (Elem a = 0; a < n; ++a) {
        if (std::any_of(set.begin(), set.end(), [&](Elem t) { return r->mul(t, a) == 0; })) killed.push_back(a);
      }
      CHECK(loc.map.kernel() == killed);
    }
  }
}

TEST_CASE("idealizations") {
  auto z2 = makeZn(2);
  auto t = makeIdealization(z2, zeroIdeal(z2));
  CHECK(t->size() == 4);
  CHECK(t->units() == std::vector<Elem>{2, 3});
  CHECK(t->mul(1, 1) == 0);
  auto z4 = makeZn(4);
  CHECK(makeIdealization(z4, idealGen(z4, std::vector<Elem>{2}))->size() == 8);
  CHECK(kindOf([&] { makeIdealization(z4, wholeRing(z4)); }) == std::string("ImproperIdeal"));

  for (std::uint64_t n = 2; n <= 8; ++n) {
    auto a = makeZn(n);
    const auto lattice = allIdeals(a);
    for (const auto& j : lattice.ideals()) {
      if (!j.isProper()) continue;
      auto ext = makeIdealization(a, j);
      const std::size_t m = idealizationModule(*ext)->size();
      CHECK(ext->size() == n * m);
      for (Elem e = 0; e < ext->size(); ++e) CHECK(ext->isUnit(e) == a->isUnit(static_cast<Elem>(e / m)));
    }
  }
}

TEST_CASE("local algebra F_p[x,y]/(x^2,xy,y^2)") {
  auto l2 = makeLocalAlgebra(2);
  CHECK(l2->size() == 8);
  CHECK(l2->units().size() == 4);
  for (Elem u : l2->units()) CHECK(u % 2 == 1);
  const Elem x = 2, y = 4;
  CHECK(l2->mul(x, y) == 0);
  CHECK(l2->mul(x, x) == 0);
  CHECK(l2->mul(y, y) == 0);
  CHECK(makeLocalAlgebra(3)->size() == 27);
  CHECK(kindOf([] { makeLocalAlgebra(4); }) == std::string("NotPrime"));
  CHECK(l2->elementName(1 + 2 + 4) == "1+x+y");
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(isomorphic(makeZn(4), makeProduct(makeZn(2), makeZn(2))));
  auto id = isomorphismSearch(makeZn(2), makeZn(2));
  REQUIRE(id);
  CHECK(std::vector<Elem>(id->map().begin(), id->map().end()) == std::vector<Elem>{0, 1});
  CHECK(isomorphic(makeProduct(makeZn(3), makeZn(4)), makeProduct(makeZn(4), makeZn(3))));
  CHECK(kindOf([] { isomorphismSearch(makeZn(65), makeZn(65)); }) == std::string("SearchCapExceeded"));
}

TEST_CASE("caps") {
  CHECK(kindOf([] { makeZn(1025); }) == std::string("CapExceeded"));
  Limits big;
  big.element_cap = 2000;
  CHECK(makeZn(1500, big)->size() == 1500);
  CHECK(kindOf([] { makeProduct(makeZn(40), makeZn(40)); }) == std::string("CapExceeded"));
  Limits small;
  small.element_cap = 10;
  CHECK(kindOf([&] { makeLocalAlgebra(3, small); }) == std::string("CapExceeded"));

  ::setenv("IDEALIS_CAP", "16", 1);
  CHECK(Limits::fromEnvironment().element_cap == 16);
  ::setenv("IDEALIS_CAP", "junk", 1);
  CHECK(Limits::fromEnvironment().element_cap == 1024);
  ::unsetenv("IDEALIS_CAP");
}

TEST_CASE("tables that are not rings are rejected") {
  auto z4 = makeZn(4);
  std::vector<Elem> add(16), mul(16);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      add[a * 4 + b] = z4->add(a, b);
      mul[a * 4 + b] = z4->mul(a, b);
    }
  }
  mul[2 * 4 + 2] = 2;
  CHECK(kindOf([&] { FiniteRing::create(4, add, mul, 0, 1, RingExpr::zn(4)); }) == std::string("InvariantViolation"));
  auto broken = FiniteRing::uncheckedForTesting(4, add, mul, 0, 1, RingExpr::zn(4));
  CHECK_FALSE(oracle::ringAxioms(*broken));
}

TEST_CASE("homomorphisms are verified") {
  auto z4 = makeZn(4), z2 = makeZn(2);
  auto f = Homomorphism::make(z4, z2, {0, 1, 0, 1});
  CHECK(f.kernel() == std::vector<Elem>{0, 2});
  CHECK(f.isSurjective());
  CHECK_FALSE(f.isInjective());
  CHECK(kindOf([&] { Homomorphism::make(z2, z4, {0, 1}); }) == std::string("InvariantViolation"));
  CHECK(kindOf([&] { Homomorphism::make(z4, z2, {0, 0, 0, 0}); }) == std::string("InvariantViolation"));
}

TEST_CASE("property: every constructed ring satisfies the axioms and reg(A) = u(A)") {
  gen::Gen g;
  for (int i = 0; i < 150; ++i) {
    RingPtr r = g.ring(32);
    CAPTURE(printExpr(r->provenance()));
    CHECK(oracle::ringAxioms(*r));
    CHECK(r->units() == oracle::unitsByScan(*r));
    CHECK(r->regularElements() == r->units());
    for (Elem u : r->units()) {
      auto inv = r->inverse(u);
      REQUIRE(inv);
      CHECK(r->mul(u, *inv) == r->one());
    }
    // Every ring is reachable again from its own provenance text.
    auto again = parseAndBuild(printExpr(r->provenance()));
    CHECK(again->size() == r->size());
  }
}
