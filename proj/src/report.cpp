#include "idealis/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "idealis/corpus.hpp"
#include "idealis/dsl.hpp"
#include "json.hpp"

namespace idealis {

using nlohmann::json;

ClassificationReport buildReport(const std::string& ring_text, const Limits& limits,
                                 const std::optional<std::string>& ideal_text) {
  const RingExpr expr = parseRing(ring_text);
  ClassificationReport out;
  out.ring = printExpr(expr);
  out.ring_ptr = elaborate(expr, limits);
  out.ring_size = out.ring_ptr->size();
  out.corpus_hash = defaultCorpusHash();
  const IdealLattice lattice = allIdeals(out.ring_ptr, limits);
  out.lattice_edges = lattice.coveringEdges();
  if (ideal_text) {
    const Ideal ideal = parseIdeal(*ideal_text, out.ring_ptr);
    if (!ideal.isProper()) throw Error(ErrorKind::ImproperIdeal, ideal.label() + " is the whole ring");
    out.indices.push_back(*lattice.indexOf(ideal));
    out.ideals.push_back(classify(ideal));
  } else {
    for (std::size_t i : lattice.properIndices()) {
      out.indices.push_back(i);
      out.ideals.push_back(classify(lattice[i]));
    }
  }
  return out;
}

std::string toJson(const ClassificationReport& report) {
  json ideals = json::array();
  for (std::size_t k = 0; k < report.ideals.size(); ++k) {
    const PropertyReport& rep = report.ideals[k];
    json verdicts = json::object();
    json witnesses = json::object();
    for (Property p : kAllProperties) {
      verdicts[propertyName(p)] = rep.holds(p);
      if (!rep.holds(p)) witnesses[propertyName(p)] = rep.witness(p);
    }
    json flags = json::array();
    if (rep.zero_ideal_two_absorbing) flags.push_back("zeroIdealTwoAbsorbing");
    ideals.push_back({
        {"index", report.indices[k]},
        {"generators", rep.ideal.literal()},
        {"label", rep.ideal.label()},
        {"elements", rep.ideal.elements()},
        {"code", rep.code()},
        {"verdicts", verdicts},
        {"witnesses", witnesses},
        {"flags", flags},
    });
  }
  json edges = json::array();
  for (const auto& [lo, hi] : report.lattice_edges) edges.push_back({lo, hi});
  const json doc = {
      {"ring", report.ring},
      {"ringSize", report.ring_size},
      {"ideals", ideals},
      {"latticeEdges", edges},
      {"toolVersion", report.tool_version},
      {"corpusHash", report.corpus_hash},
  };
  return doc.dump(2) + "\n";
}

std::vector<std::string> recheck(const ClassificationReport& report, const Limits& limits) {
  std::vector<std::string> problems;
  const RingPtr fresh = parseAndBuild(report.ring, limits);
  if (fresh->size() != report.ring_size) {
    problems.push_back("ring size " + std::to_string(report.ring_size) + " but a fresh build has " +
                       std::to_string(fresh->size()));
    return problems;
  }
  for (const auto& rep : report.ideals) {
    const std::string where = report.ring + " " + rep.ideal.literal();
    const Ideal ideal = parseIdeal(rep.ideal.literal(), fresh);
    if (ideal.elements() != rep.ideal.elements()) {
      problems.push_back(where + ": element set differs from a fresh closure of the generators");
      continue;
    }
    const PropertyReport again = classify(ideal);
    for (Property p : kAllProperties) {
      if (again.holds(p) != rep.holds(p)) {
        problems.push_back(where + ": " + propertyName(p) + " verdict differs on recomputation");
      } else if (!rep.holds(p) && !witnessViolates(p, ideal, rep.witness(p))) {
        problems.push_back(where + ": " + propertyName(p) + " witness does not violate the predicate");
      }
    }
  }
  return problems;
}

std::string latticeCode(const Ideal& ideal) {
  if (!ideal.isProper()) return "------";
  return classify(ideal).code();
}

namespace {

bool cubeZeroMaximal(const IdealLattice& lattice, std::size_t i) {
  const auto& maxes = lattice.maximalIndices();
  return maxes.size() == 1 && maxes[0] == i && idealPower(lattice[i], 3).isZero();
}

std::string dotEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string latticeDot(const std::string& ring_text, const IdealLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  label=\"" << dotEscape(ring_text) << "\";\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=\"" << dotEscape(lattice[i].label()) << "\\n" << latticeCode(lattice[i]);
    if (cubeZeroMaximal(lattice, i)) out << "\\nm^3=0";
    out << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.coveringEdges()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string latticeText(const std::string& ring_text, const IdealLattice& lattice) {
  const auto edges = lattice.coveringEdges();
  std::size_t width = 5;
  for (const auto& ideal : lattice.ideals()) width = std::max(width, ideal.label().size());
  std::ostringstream out;
  out << ring_text << ": " << lattice.size() << " ideals, " << edges.size() << " covering edges\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const std::string label = lattice[i].label();
    out << "  " << i << "  " << label << std::string(width - label.size(), ' ') << "  " << latticeCode(lattice[i])
        << "  |P|=" << lattice[i].size();
    std::string below;
    for (const auto& [lo, hi] : edges) {
      if (hi == i) below += (below.empty() ? "" : ",") + std::to_string(lo);
    }
    if (!below.empty()) out << "  covers " << below;
    if (cubeZeroMaximal(lattice, i)) out << "  m^3=0";
    out << "\n";
  }
  return out.str();
}

std::string verifyTable(const std::vector<TheoremCheck>& checks) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-44s %-8s %10s %10s %10s\n", "check", "outcome", "tested", "vacuous",
                "violations");
  out << line;
  for (const auto& check : checks) {
    std::snprintf(line, sizeof line, "%-44s %-8s %10zu %10zu %10zu\n", check.id.c_str(), toString(check.outcome()),
                  check.tested(), check.vacuous(), check.violations());
    out << line;
    for (const auto& clause : check.clauses) {
      const std::string name = "  " + clause.name;
      std::snprintf(line, sizeof line, "%-44s %-8s %10zu %10zu %10zu\n", name.c_str(), toString(clause.outcome()),
                    clause.tested, clause.vacuous, clause.violations);
      out << line;
    }
  }
  bool notes = false;
  for (const auto& check : checks) {
    for (const auto& clause : check.clauses) {
      if (clause.outcome() != Outcome::Vacuous || clause.note.empty()) continue;
      if (!notes) out << "\nnotes:\n";
      notes = true;
      out << "  " << check.id << " / " << clause.name << ": " << clause.note << "\n";
    }
    for (const auto& note : check.notes) {
      if (!notes) out << "\nnotes:\n";
      notes = true;
      out << "  " << check.id << ": " << note << "\n";
    }
  }
  bool any = false;
  for (const auto& check : checks) {
    for (const auto& cex : check.counterexamples) {
      if (!any) out << "\ncounterexamples:\n";
      any = true;
      out << "  " << check.id << " / " << cex.clause << ": " << cex.detail << "\n";
      if (!cex.ring.empty()) out << "    rerun: " << cex.command() << "\n";
      const bool again = cex.reproduce && cex.reproduce();
      out << "    re-evaluation reproduces it: " << (again ? "yes" : "no") << "\n";
    }
  }
  return out.str();
}

std::string defaultCorpusHash() {
  std::string all;
  for (const auto& e : defaultCorpusExpressions()) {
    all += printExpr(e);
    all += '\n';
  }
  return fnv1aHex(all);
}

}  // namespace idealis
