#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "idealis/dsl.hpp"
#include "idealis/report.hpp"
#include "idealis/search.hpp"
#include "json.hpp"

using namespace idealis;

namespace {

const char* const kZ4Golden = R"json({
  "corpusHash": "3703c7bc826ef76c",
  "ideals": [
    {
      "code": "PpAaTt",
      "elements": [
        0,
        2
      ],
      "flags": [],
      "generators": "(2)",
      "index": 1,
      "label": "(2)",
      "verdicts": {
        "oneAbsorbingPrime": true,
        "prime": true,
        "twoAbsorbing": true,
        "weaklyOneAbsorbingPrime": true,
        "weaklyPrime": true,
        "weaklyTwoAbsorbing": true
      },
      "witnesses": {}
    }
  ],
  "latticeEdges": [
    [
      0,
      1
    ],
    [
      1,
      2
    ]
  ],
  "ring": "Z4",
  "ringSize": 4,
  "toolVersion": "idealis 1.0.0"
}
)json";

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<std::string> searchAll(const std::string& property, std::size_t max_size) {
  std::vector<std::string> out;
  search(PropertyExpr::parse(property), max_size, Limits{},
         [&](const SearchHit& hit) { out.push_back(hit.ring + " " + hit.ideal); });
  return out;
}

std::size_t errorOffset(const std::string& text) {
  try {
    PropertyExpr::parse(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("JSON report matches the golden bytes") {
  CHECK(toJson(buildReport("Z4", Limits{}, std::string("(2)"))) == kZ4Golden);
  CHECK(toJson(buildReport(" Z4 ", Limits{}, std::string("( 2 )"))) == kZ4Golden);
}

TEST_CASE("JSON report for Z12 (4)") {
  const auto report = buildReport("Z12", Limits{}, std::string("(4)"));
  const auto j = nlohmann::json::parse(toJson(report));
  CHECK(j["ring"] == "Z12");
  CHECK(j["ringSize"] == 12);
  CHECK(j["corpusHash"] == defaultCorpusHash());
  CHECK(j["latticeEdges"].size() == 7);
  REQUIRE(j["ideals"].size() == 1);
  const auto& ideal = j["ideals"][0];
  CHECK(ideal["code"] == "...aTt");
  CHECK(ideal["verdicts"]["weaklyOneAbsorbingPrime"] == true);
  CHECK(ideal["verdicts"]["weaklyPrime"] == false);
  CHECK(ideal["witnesses"]["weaklyPrime"] == nlohmann::json::array({2, 2}));
  CHECK_FALSE(ideal["witnesses"].contains("weaklyOneAbsorbingPrime"));
  CHECK(toJson(report) == toJson(buildReport("Z12", Limits{}, std::string("(4)"))));
}

TEST_CASE("whole-ring reports cover every proper ideal") {
  const auto report = buildReport("Z8", Limits{});
  CHECK(report.ideals.size() == 3);
  const auto j = nlohmann::json::parse(toJson(report));
  CHECK(j["ideals"][0]["flags"] == nlohmann::json::array({"zeroIdealTwoAbsorbing"}));
  CHECK(j["ideals"][1]["flags"].empty());
  CHECK_THROWS_AS(buildReport("Z8", Limits{}, std::string("(1)")), Error);
  CHECK_THROWS_AS(buildReport("Z8 x", Limits{}), SyntaxError);
}

TEST_CASE("recheck reproduces a valid report") {
  for (const char* text : {"Z12", "Z30", "Z2 x Z4", "LocalAlg(2)", "Idealize(Z4, (2))", "Loc(Z12, (1,3,9))"}) {
    CAPTURE(text);
    CHECK(recheck(buildReport(text, Limits{}), Limits{}).empty());
  }
}

TEST_CASE("recheck notices a tampered report") {
  auto report = buildReport("Z12", Limits{}, std::string("(4)"));
  report.ideals[0].verdicts[static_cast<std::size_t>(Property::WeaklyPrime)] = true;
  CHECK_FALSE(recheck(report, Limits{}).empty());

  auto bad_witness = buildReport("Z12", Limits{}, std::string("(4)"));
  bad_witness.ideals[0].witnesses[static_cast<std::size_t>(Property::WeaklyPrime)] = {1, 1};
  CHECK_FALSE(recheck(bad_witness, Limits{}).empty());
}

TEST_CASE("lattice rendering") {
  const auto z12 = allIdeals(makeZn(12));
  const std::string dot = latticeDot("Z12", z12);
  CHECK(dot.rfind("digraph lattice {", 0) == 0);
  CHECK(count(dot, " -> ") == 7);
  CHECK(count(dot, " [label=") == 6);
  CHECK(dot.find("n0 [label=\"(0)\\n.p.a.t\"];") != std::string::npos);
  CHECK(dot.find("n5 [label=\"(1)\\n------\"];") != std::string::npos);

  const auto l2 = allIdeals(parseAndBuild("LocalAlg(2)"));
  CHECK(count(latticeDot("LocalAlg(2)", l2), "m^3=0") == 1);
  const std::string text = latticeText("LocalAlg(2)", l2);
  CHECK(text.rfind("LocalAlg(2): 6 ideals, 7 covering edges\n", 0) == 0);
  CHECK(text.find("covers 1,2,3") != std::string::npos);

  CHECK(count(latticeDot("Z2", allIdeals(makeZn(2))), " -> ") == 1);
  CHECK(latticeCode(wholeRing(makeZn(5))) == "------");
  CHECK(latticeCode(zeroIdeal(makeZn(5))) == "PpAaTt");
}

TEST_CASE("verify table") {
  TheoremCheck c;
  c.id = "demo";
  c.clauses.push_back(Clause{"only clause", 0, 4, 0, "nothing to test"});
  const std::string table = verifyTable({c});
  CHECK(table.find("demo") != std::string::npos);
  CHECK(table.find("vacuous") != std::string::npos);
  CHECK(table.find("nothing to test") != std::string::npos);
}

TEST_CASE("property expressions") {
  CHECK(PropertyExpr::parse("w1ap AND NOT weaklyPrime").print() == "(weaklyOneAbsorbingPrime AND NOT weaklyPrime)");
  CHECK(PropertyExpr::parse("prime or weaklyPrime and twoAbsorbing").print() ==
        "(prime OR (weaklyPrime AND twoAbsorbing))");
  CHECK(PropertyExpr::parse("(prime OR weaklyPrime) AND twoAbsorbing").print() ==
        "((prime OR weaklyPrime) AND twoAbsorbing)");
  CHECK(PropertyExpr::parse("NOT NOT prime").print() == "NOT NOT prime");

  const auto expr = PropertyExpr::parse("w1ap AND NOT weaklyPrime");
  CHECK(expr.mentioned().size() == 2);
  std::vector<Property> asked;
  const bool value = expr.eval([&](Property p) {
    asked.push_back(p);
    return p == Property::WeaklyOneAbsorbingPrime;
  });
  CHECK(value);
  CHECK(asked.size() == 2);
  const auto rep = classify(parseIdeal("(4)", makeZn(12)));
  CHECK(expr.eval(rep));

  CHECK(errorOffset("prime AND") == 9);
  CHECK(errorOffset("prime AND semiprime") == 10);
  CHECK(errorOffset("(prime") == 6);
  CHECK(errorOffset("prime prime") == 6);
  CHECK(errorOffset("") == 0);
  CHECK(errorOffset(std::string(10000, '(') + "prime" + std::string(10000, ')')) != std::string::npos);
}

TEST_CASE("search order") {
  const auto hits = searchAll("w1ap AND NOT weaklyPrime", 16);
  REQUIRE(hits.size() == 5);
  CHECK(hits == std::vector<std::string>{"Z8 (4)", "Z2 x Z4 ((1,0))", "Z12 (4)", "Z3 x Z4 ((1,0))", "Z16 (4)"});
  CHECK(searchAll("prime", 4) ==
        std::vector<std::string>{"Z2 (0)", "Z3 (0)", "Z4 (2)", "Z2 x Z2 ((0,1))", "Z2 x Z2 ((1,0))"});
  CHECK(searchAll("prime AND NOT prime", 32).empty());
}

TEST_CASE("search universe") {
  const auto universe = searchUniverse(8);
  std::vector<std::string> texts;
  for (const auto& e : universe) texts.push_back(printExpr(e));
  CHECK(texts == std::vector<std::string>{"Z2", "Z3", "Z4", "Z2 x Z2", "Z5", "Z6", "Z2 x Z3", "Z7", "Z8",
                                          "Z2 x Z4", "Z2 x Z2 x Z2", "LocalAlg(2)"});
}
