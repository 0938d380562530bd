#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "idealis/corpus.hpp"
#include "idealis/dsl.hpp"
#include "idealis/report.hpp"
#include "idealis/search.hpp"
#include "idealis/theorems.hpp"

using namespace idealis;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

void printSyntaxError(const SyntaxError& e, const std::string& input) {
  std::cerr << "idealis: " << e.what() << "\n";
  if (!input.empty() && input.find('\n') == std::string::npos && e.offset() <= input.size()) {
    std::cerr << "  " << input << "\n  " << std::string(e.offset(), ' ') << "^\n";
  }
}

int classifyCommand(const std::string& ring, const std::optional<std::string>& ideal, bool text, bool recheck_flag,
                    const Limits& limits) {
  const ClassificationReport report = buildReport(ring, limits, ideal);
  if (text) {
    std::cout << report.ring << " (" << report.ring_size << " elements)\n";
    for (const auto& rep : report.ideals) {
      std::cout << "  " << rep.ideal.label() << "  " << rep.code();
      for (Property p : kAllProperties) {
        if (rep.holds(p)) continue;
        std::cout << "  " << propertyCode(p) << "=(";
        for (std::size_t i = 0; i < rep.witness(p).size(); ++i) {
          std::cout << (i ? "," : "") << report.ring_ptr->elementName(rep.witness(p)[i]);
        }
        std::cout << ")";
      }
      std::cout << "\n";
    }
  } else {
    std::cout << toJson(report);
  }
  if (!recheck_flag) return 0;
  const auto problems = recheck(report, limits);
  for (const auto& p : problems) std::cerr << "recheck: " << p << "\n";
  if (!problems.empty()) return kExitFailure;
  std::cerr << "recheck: " << report.ideals.size() << " ideals reproduced from scratch\n";
  return 0;
}

int latticeCommand(const std::string& ring_text, bool dot, const Limits& limits) {
  const RingExpr expr = parseRing(ring_text);
  const IdealLattice lattice = allIdeals(elaborate(expr, limits), limits);
  std::cout << (dot ? latticeDot(printExpr(expr), lattice) : latticeText(printExpr(expr), lattice));
  return 0;
}

int verifyCommand(bool use_default, const std::string& corpus_path, bool recheck_flag, bool inject_fault,
                  const Limits& limits) {
  if (use_default == !corpus_path.empty()) {
    std::cerr << "idealis: verify needs exactly one of --default or --corpus\n";
    return kExitInput;
  }
  Corpus corpus = use_default ? Corpus::defaultCorpus(limits) : Corpus::fromFile(corpus_path, limits);
  if (inject_fault) injectTableFault(corpus, RingExpr::zn(8), parseAndBuild("Z2 x Z4", limits), limits);
  if (corpus.empty()) std::cerr << "warning: corpus " << corpus.name() << " is empty; every check is vacuous\n";

  std::size_t ideals = 0;
  for (const auto& r : corpus.rings()) ideals += r.reports.size();
  std::cout << "corpus " << corpus.name() << ": " << corpus.rings().size() << " rings, " << ideals
            << " proper ideals, hash " << corpus.hash() << "\n\n";

  const auto checks = runAllChecks(corpus, limits);
  std::cout << verifyTable(checks);

  std::size_t pass = 0, vacuous = 0, fail = 0;
  for (const auto& c : checks) {
    switch (c.outcome()) {
      case Outcome::Pass: ++pass; break;
      case Outcome::Vacuous: ++vacuous; break;
      case Outcome::Fail: ++fail; break;
    }
  }
  std::cout << "\n" << checks.size() << " checks: " << pass << " pass, " << vacuous << " vacuous, " << fail
            << " fail\n";

  std::size_t bad_witnesses = 0;
  if (recheck_flag) {
    std::size_t witnesses = 0;
    for (const auto& r : corpus.rings()) {
      for (const auto& rep : r.reports) {
        for (Property p : kAllProperties) {
          if (rep.holds(p)) continue;
          ++witnesses;
          if (witnessViolates(p, rep.ideal, rep.witness(p))) continue;
          ++bad_witnesses;
          std::cerr << "recheck: " << r.text << " " << rep.ideal.literal() << ": " << propertyName(p)
                    << " witness does not violate the predicate\n";
        }
      }
    }
    std::cout << "recheck: " << witnesses - bad_witnesses << " of " << witnesses << " witnesses re-validated\n";
  }
  return fail > 0 || bad_witnesses > 0 ? kExitFailure : 0;
}

int searchCommand(const std::string& property_text, std::size_t max_size, const Limits& limits) {
  PropertyExpr property;
  try {
    property = PropertyExpr::parse(property_text);
  } catch (const SyntaxError& e) {
    printSyntaxError(e, property_text);
    return kExitInput;
  }
  const auto hits = search(property, max_size, limits, [](const SearchHit& hit) {
    std::cout << hit.ring << "\t" << hit.ideal << "\t" << hit.code << std::endl;
  });
  std::cerr << hits << " matches for " << property.print() << " up to size " << max_size << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal classes of finite commutative rings"};
  app.require_subcommand(1);
  std::optional<std::size_t> cap;
  app.add_option("--cap", cap, "Element cap for every ring construction (overrides IDEALIS_CAP)");

  auto* classify_cmd = app.add_subcommand("classify", "Classify one ideal, or every proper ideal, of a ring");
  std::string ring_text;
  std::optional<std::string> ideal_text;
  bool text = false, json = false, recheck_flag = false;
  classify_cmd->add_option("ring", ring_text, "Ring expression, e.g. \"Z12\" or \"Z2 x Z4\"")->required();
  classify_cmd->add_option("ideal", ideal_text, "Generators, e.g. \"(4)\" or \"((1,0))\"");
  classify_cmd->add_flag("--json", json, "JSON report (the default)");
  classify_cmd->add_flag("--text", text, "One line per ideal instead of JSON")->excludes("--json");
  classify_cmd->add_flag("--recheck", recheck_flag, "Rebuild from scratch and re-validate every verdict and witness");

  auto* lattice_cmd = app.add_subcommand("lattice", "Print the ideal lattice");
  bool dot = false;
  lattice_cmd->add_option("ring", ring_text, "Ring expression")->required();
  lattice_cmd->add_flag("--dot", dot, "Graphviz digraph of the covering relation");

  auto* verify_cmd = app.add_subcommand("verify", "Run every theorem check over a corpus");
  bool use_default = false, inject_fault = false;
  std::string corpus_path;
  verify_cmd->add_flag("--default", use_default, std::string("Use the built-in corpus ") + kDefaultCorpusVersion);
  verify_cmd->add_option("--corpus", corpus_path, "File with one ring expression per line, '#' comments");
  verify_cmd->add_flag("--recheck", recheck_flag, "Also re-validate every witness of every corpus ideal");
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

  auto* search_cmd = app.add_subcommand("search", "Find ideals satisfying a property expression");
  std::string property_text;
  std::size_t max_size = 64;
  search_cmd->add_option("--property", property_text, "e.g. \"w1ap AND NOT weaklyPrime\"")->required();
  search_cmd->add_option("--max-size", max_size, "Largest ring size to scan")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  Limits limits = Limits::fromEnvironment();
  if (cap) limits.element_cap = *cap;

  try {
    if (*classify_cmd) return classifyCommand(ring_text, ideal_text, text, recheck_flag, limits);
    if (*lattice_cmd) return latticeCommand(ring_text, dot, limits);
    if (*verify_cmd) return verifyCommand(use_default, corpus_path, recheck_flag, inject_fault, limits);
    if (*search_cmd) return searchCommand(property_text, max_size, limits);
  } catch (const SyntaxError& e) {
    printSyntaxError(e, *classify_cmd || *lattice_cmd ? ring_text : std::string());
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "idealis: " << e.what() << "\n";
    return e.isCapError() ? kExitCap : kExitInput;
  }
  return kExitInput;
}
