#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "idealis/classify.hpp"
#include "idealis/expr.hpp"
#include "idealis/ideal.hpp"

namespace idealis {

inline constexpr const char* kDefaultCorpusVersion = "default-corpus-v1";

/// One ring of a corpus with its lattice and a report for every proper ideal.
struct CorpusRing {
  RingExpr expr;
  std::string text;
  RingPtr ring;
  std::shared_ptr<const IdealLattice> lattice;
  std::vector<PropertyReport> reports;  // proper ideals, in lattice order

  bool allProperW1ap() const;
  /// Report for lattice index `i`; nullptr for the whole ring.
  const PropertyReport* report(std::size_t i) const;
  const LatticeTables& tables() const;

 private:
  mutable std::shared_ptr<const LatticeTables> tables_;
};

CorpusRing buildCorpusRing(RingExpr expr, const Limits& limits = {});
/// Same, for a ring that was built by other means (e.g. a test fixture).
CorpusRing buildCorpusRing(RingPtr ring, const Limits& limits = {});

class Corpus {
 public:
  static Corpus fromExpressions(std::string name, const std::vector<RingExpr>& exprs, const Limits& limits = {});
  /// One expression per line; '#' starts a comment. Syntax errors report the byte offset within `text`.
  static Corpus fromText(std::string name, std::string_view text, const Limits& limits = {});
  static Corpus fromFile(const std::string& path, const Limits& limits = {});
  static Corpus defaultCorpus(const Limits& limits = {});

  const std::string& name() const { return name_; }
  const std::vector<CorpusRing>& rings() const { return rings_; }
  std::vector<CorpusRing>& mutableRings() { return rings_; }
  bool empty() const { return rings_.empty(); }
  /// FNV-1a over the canonical ring texts, as 16 hex digits.
  std::string hash() const;

 private:
  std::string name_;
  std::vector<CorpusRing> rings_;
};

/// All Z_n (n <= 100), Z_a x Z_b (2 <= a <= b, ab <= 100), LocalAlg(2), LocalAlg(3),
/// and Idealize(Z_n, J) for n <= 8 and every proper ideal J.
std::vector<RingExpr> defaultCorpusExpressions();

std::string fnv1aHex(std::string_view text);

/// Test hook: gives the corpus ring printed as `text` the operation tables of `donor`
/// (same size) while keeping its name, appending it first if absent. The result is a
/// valid ring that no longer matches its expression, which only the theorem checks can notice.
void injectTableFault(Corpus& corpus, const RingExpr& text, const RingPtr& donor, const Limits& limits = {});

}  // namespace idealis
