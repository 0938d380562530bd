#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealis/classify.hpp"
#include "idealis/theorems.hpp"

namespace idealis {

inline constexpr const char* kToolVersion = "idealis 1.0.0";

/// Everything `classify` prints: the ring, the reports for the requested ideals
/// and the covering relation of the whole lattice (pairs of lattice indices, lower first).
struct ClassificationReport {
  std::string ring;
  std::size_t ring_size = 0;
  RingPtr ring_ptr;
  std::vector<std::size_t> indices;  // lattice index of each entry in `ideals`
  std::vector<PropertyReport> ideals;
  std::vector<std::pair<std::size_t, std::size_t>> lattice_edges;
  std::string tool_version = kToolVersion;
  std::string corpus_hash;
};

/// Classifies `ideal` alone, or every proper ideal when it is absent.
ClassificationReport buildReport(const std::string& ring_text, const Limits& limits,
                                 const std::optional<std::string>& ideal_text = std::nullopt);

/// Key-sorted JSON with two-space indentation and a trailing newline.
std::string toJson(const ClassificationReport& report);

/// Rebuilds the ring from its text, reclassifies every ideal from its generators and
/// re-evaluates every witness against the fresh tables. Returns one line per mismatch.
std::vector<std::string> recheck(const ClassificationReport& report, const Limits& limits);

/// Hasse diagram of the ideal lattice, bottom to top. Nodes carry the generators
/// and the six-letter code; the maximal ideal of a quasi-local ring with m^3 = 0 is annotated.
std::string latticeDot(const std::string& ring_text, const IdealLattice& lattice);
/// The same information as aligned text, one ideal per line.
std::string latticeText(const std::string& ring_text, const IdealLattice& lattice);

/// Code for lattice labels: six letters for a proper ideal, "------" for the whole ring.
std::string latticeCode(const Ideal& ideal);

/// Summary table with one row per check and per clause, followed by counterexamples.
std::string verifyTable(const std::vector<TheoremCheck>& checks);

/// Hash of the default corpus expressions, computed without building the rings.
std::string defaultCorpusHash();

}  // namespace idealis
