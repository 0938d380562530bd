#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "idealis/classify.hpp"
#include "idealis/construct.hpp"
#include "idealis/dsl.hpp"
#include "oracle.hpp"

using namespace idealis;

namespace {

using Elems = std::vector<Elem>;

Ideal ideal(const char* ring, const char* gens) { return parseIdeal(gens, parseAndBuild(ring)); }

std::size_t at(Property p) { return static_cast<std::size_t>(p); }

std::string kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return toString(e.kind());
  }
  return "no error";
}

}  // namespace

TEST_CASE("golden cases") {
  const auto z12_4 = classify(ideal("Z12", "(4)"));
  CHECK(z12_4.holds(Property::WeaklyOneAbsorbingPrime));
  CHECK_FALSE(z12_4.holds(Property::WeaklyPrime));
  CHECK(z12_4.witness(Property::WeaklyPrime) == Elems{2, 2});

  const auto z30_6 = classify(ideal("Z30", "(6)"));
  CHECK(z30_6.holds(Property::WeaklyTwoAbsorbing));
  CHECK_FALSE(z30_6.holds(Property::WeaklyOneAbsorbingPrime));
  CHECK(z30_6.witness(Property::WeaklyOneAbsorbingPrime) == Elems{2, 2, 3});
  CHECK(z30_6.code() == "....Tt");

  const Ideal z6_0 = ideal("Z6", "(0)");
  const auto z6 = classify(z6_0);
  CHECK(z6.holds(Property::WeaklyOneAbsorbingPrime));
  CHECK_FALSE(z6.holds(Property::OneAbsorbingPrime));
  const auto triples = find1TripleZeros(z6_0);
  REQUIRE_FALSE(triples.empty());
  CHECK(triples.front() == TripleZero{2, 2, 3});

  const auto z4_0 = classify(ideal("Z4", "(0)"));
  CHECK(z4_0.holds(Property::OneAbsorbingPrime));
  CHECK_FALSE(z4_0.holds(Property::Prime));
  CHECK(z4_0.witness(Property::Prime) == Elems{2, 2});
}

TEST_CASE("further fixed verdicts") {
  const auto z12_6 = classify(ideal("Z12", "(6)"));
  CHECK_FALSE(z12_6.holds(Property::WeaklyOneAbsorbingPrime));
  CHECK(z12_6.witness(Property::WeaklyOneAbsorbingPrime) == Elems{3, 3, 2});

  const auto z8_0 = classify(ideal("Z8", "(0)"));
  CHECK_FALSE(z8_0.holds(Property::TwoAbsorbing));
  CHECK(z8_0.witness(Property::TwoAbsorbing) == Elems{2, 2, 2});
  CHECK(z8_0.holds(Property::WeaklyTwoAbsorbing));

  CHECK(classify(ideal("Z6", "(2)")).holds(Property::Prime));
  CHECK(classify(ideal("Z7", "(0)")).code() == "PpAaTt");

  const auto x = classify(ideal("LocalAlg(2)", "(2)"));
  CHECK(x.holds(Property::WeaklyPrime));
  CHECK_FALSE(x.holds(Property::Prime));

  const auto pair = classify(ideal("Z2 x Z4", "((1,0))"));
  CHECK(pair.holds(Property::WeaklyOneAbsorbingPrime));
  CHECK_FALSE(pair.holds(Property::WeaklyPrime));
}

TEST_CASE("property names and codes") {
  CHECK(std::string(propertyName(Property::WeaklyOneAbsorbingPrime)) == "weaklyOneAbsorbingPrime");
  CHECK(std::string(propertyCode(Property::WeaklyTwoAbsorbing)) == "w2A");
  for (Property p : kAllProperties) CHECK(propertyFromName(propertyName(p)) == p);
  CHECK(propertyFromName("w1ap") == Property::WeaklyOneAbsorbingPrime);
  CHECK_FALSE(propertyFromName("semiprime"));
}

TEST_CASE("the whole ring is rejected") {
  auto z12 = makeZn(12);
  CHECK(kindOf([&] { classify(wholeRing(z12)); }) == std::string("ImproperIdeal"));
  CHECK(kindOf([&] { isPrime(wholeRing(z12)); }) == std::string("ImproperIdeal"));
}

TEST_CASE("1-triple zeros") {
  CHECK(find1TripleZeros(ideal("Z4", "(0)")).empty());
  CHECK(find1TripleZeros(ideal("Z7", "(0)")).empty());
  CHECK(kindOf([] { find1TripleZeros(ideal("Z12", "(6)")); }) == std::string("NotW1AP"));
  for (const auto& t : find1TripleZeros(ideal("Z6", "(0)"))) {
    auto r = makeZn(6);
    CHECK(r->mul(r->mul(t.x, t.y), t.z) == 0);
  }
}

TEST_CASE("zero ideal carries the two-absorbing flag") {
  CHECK(classify(ideal("Z8", "(0)")).zero_ideal_two_absorbing);
  CHECK_FALSE(classify(ideal("Z8", "(2)")).zero_ideal_two_absorbing);
}

TEST_CASE("property: verdicts and witnesses equal the brute-force oracle") {
  gen::Gen g;
  for (int round = 0; round < 80; ++round) {
    RingPtr r = g.ring(24);
    CAPTURE(printExpr(r->provenance()));
    const auto lattice = allIdeals(r);
    for (std::size_t i : lattice.properIndices()) {
      const Ideal& p = lattice[i];
      CAPTURE(p.label());
      const auto rep = classify(p);
      const auto expected = oracle::allSix(*r, oracle::maskOf(*r, p.elements()));
      for (Property prop : kAllProperties) {
        CAPTURE(propertyName(prop));
        CHECK(rep.holds(prop) == expected[at(prop)].holds);
        CHECK(rep.witness(prop) == expected[at(prop)].witness);
        CHECK(decide(prop, p).holds == rep.holds(prop));
        if (!rep.holds(prop)) CHECK(witnessViolates(prop, p, rep.witness(prop)));
      }
    }
  }
}

TEST_CASE("property: the implication diagram holds") {
  gen::Gen g;
  const std::pair<Property, Property> arrows[] = {
      {Property::Prime, Property::WeaklyPrime},
      {Property::WeaklyPrime, Property::WeaklyOneAbsorbingPrime},
      {Property::WeaklyOneAbsorbingPrime, Property::WeaklyTwoAbsorbing},
      {Property::Prime, Property::OneAbsorbingPrime},
      {Property::OneAbsorbingPrime, Property::TwoAbsorbing},
      {Property::TwoAbsorbing, Property::WeaklyTwoAbsorbing},
      {Property::OneAbsorbingPrime, Property::WeaklyOneAbsorbingPrime},
  };
  for (int round = 0; round < 120; ++round) {
    RingPtr r = g.ring(32);
    const auto lattice = allIdeals(r);
    for (std::size_t i : lattice.properIndices()) {
      const auto rep = classify(lattice[i]);
      for (const auto& [from, to] : arrows) CHECK((!rep.holds(from) || rep.holds(to)));
    }
  }
}

TEST_CASE("separating examples for the irreversible arrows") {
  // weaklyPrime but not prime
  CHECK(classify(ideal("Z8", "(0)")).code().substr(0, 2) == ".p");
  // w1ap but not weaklyPrime
  CHECK(classify(ideal("Z12", "(4)")).code().substr(1, 3) == "..a");
  // 1absPrime but not prime
  CHECK(classify(ideal("Z4", "(0)")).code().substr(0, 3) == ".pA");
  // w1ap but not 1absPrime
  CHECK(classify(ideal("Z6", "(0)")).code().substr(2, 2) == ".a");
  // 2absorbing but not 1absPrime
  CHECK(classify(ideal("Z6", "(0)")).code()[4] == 'T');
  // weakly2Absorbing but not w1ap or 2absorbing
  CHECK(classify(ideal("Z30", "(6)")).code() == "....Tt");
  CHECK(classify(ideal("Z8", "(0)")).code().substr(4) == ".t");
}

TEST_CASE("property: w1ap without 1-triple zeros is exactly 1-absorbing prime") {
  gen::Gen g;
  for (int round = 0; round < 80; ++round) {
    RingPtr r = g.ring(32);
    const auto lattice = allIdeals(r);
    for (std::size_t i : lattice.properIndices()) {
      const Ideal& p = lattice[i];
      const auto rep = classify(p);
      if (!rep.holds(Property::WeaklyOneAbsorbingPrime)) continue;
      CHECK(find1TripleZeros(p).empty() == rep.holds(Property::OneAbsorbingPrime));
    }
  }
}

TEST_CASE("property: the six conditions of the weak 1-absorbing characterization agree") {
  gen::Gen g;
  for (int round = 0; round < 60; ++round) {
    RingPtr r = g.ring(32);
    CAPTURE(printExpr(r->provenance()));
    const auto lattice = allIdeals(r);
    const LatticeTables tables(lattice);
    for (std::size_t i : lattice.properIndices()) {
      const Ideal& p = lattice[i];
      const auto cond = tmmCharacterize(p, tables);
      CHECK(cond.allAgree());
      CHECK(cond.holds[0] == isWeaklyOneAbsorbingPrime(p).holds);
      CHECK(tmmColonCondition(p) == cond.holds[1]);
      CHECK(tmmIdealTripleCondition(p, tables) == cond.holds[5]);
    }
  }
}

TEST_CASE("witnessViolates rejects non-witnesses") {
  const Ideal p = ideal("Z12", "(4)");
  CHECK(witnessViolates(Property::WeaklyPrime, p, Elems{2, 2}));
  CHECK_FALSE(witnessViolates(Property::WeaklyPrime, p, Elems{2, 3}));
  CHECK_FALSE(witnessViolates(Property::WeaklyPrime, p, Elems{2}));
  CHECK_FALSE(witnessViolates(Property::Prime, p, Elems{4, 1}));
  CHECK_FALSE(witnessViolates(Property::WeaklyOneAbsorbingPrime, p, Elems{1, 2, 2}));
}

TEST_CASE("allProperIdealsW1AP") {
  CHECK(allProperIdealsW1AP(allIdeals(makeZn(8))).holds);
  CHECK(allProperIdealsW1AP(allIdeals(makeZn(6))).holds);
  const auto z12 = allProperIdealsW1AP(allIdeals(makeZn(12)));
  CHECK_FALSE(z12.holds);
  REQUIRE(z12.failing);
  CHECK(z12.failing->label() == "(6)");
  CHECK(z12.witness == Elems{3, 3, 2});
}
