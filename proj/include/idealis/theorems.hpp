#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idealis/corpus.hpp"

namespace idealis {

enum class Outcome { Pass, Fail, Vacuous };
const char* toString(Outcome outcome);

/// A concrete instance where a statement failed.
struct Counterexample {
  std::string clause;
  std::string ring;                 // expression text of the ring the instance lives in
  std::vector<std::string> ideals;  // ideal literals in that ring
  std::string detail;
  /// Re-evaluates the failed statement from the raw tables; true iff the failure reproduces.
  std::function<bool()> reproduce;

  /// Shell command(s) that classify the involved ideals from scratch.
  std::string command() const;
};

/// One falsifiable statement. `tested` counts instances whose hypotheses held;
/// `vacuous` counts enumerated instances whose hypotheses did not.
struct Clause {
  std::string name;
  std::size_t tested = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::string note;

  Outcome outcome() const;
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  std::vector<Clause> clauses;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  std::size_t tested() const;
  std::size_t vacuous() const;
  std::size_t violations() const;
  /// Fail on any violation, Vacuous if no clause saw a non-vacuous instance, else Pass.
  Outcome outcome() const;
  const Clause* clause(const std::string& name) const;
};

inline constexpr std::size_t kMaxCounterexamplesPerClause = 3;

TheoremCheck checkTred(const Corpus& corpus);
TheoremCheck checkThom(const std::vector<Homomorphism>& maps);
TheoremCheck checkThom(const Corpus& corpus, const Limits& limits = {});
/// Identity maps, quotient projections, diagonals A -> A x A (|A| <= 10),
/// idealization inclusions and product projections drawn from the corpus.
std::vector<Homomorphism> corpusHomomorphisms(const Corpus& corpus, const Limits& limits = {});
TheoremCheck checkTfac(const Corpus& corpus);
/// Multiplicative sets used per ring: {1}, the unit group, every cyclic {1, s, s^2, ...}
/// avoiding 0, and every prime complement A - p.
std::vector<std::vector<Elem>> multiplicativeSets(const CorpusRing& ring);
TheoremCheck checkTloc(const Corpus& corpus, const Limits& limits = {});
TheoremCheck checkNql(const Corpus& corpus);
TheoremCheck checkTmm(const Corpus& corpus);
TheoremCheck checkTtriple(const Corpus& corpus);
TheoremCheck checkReducedTriple(const Corpus& corpus);
TheoremCheck checkTtri(const Corpus& corpus, const Limits& limits = {});
TheoremCheck checkTcar(const Corpus& corpus);
TheoremCheck checkTcarr(const Corpus& corpus);
TheoremCheck checkPc1(const Corpus& corpus);
TheoremCheck checkTql(const Corpus& corpus);
TheoremCheck checkCorM2(const Corpus& corpus);
TheoremCheck checkTmax(const Corpus& corpus);
TheoremCheck checkTring(const Corpus& corpus, const Limits& limits = {});
TheoremCheck checkZnExample(const Corpus& corpus, const Limits& limits = {});

/// All seventeen checks in a fixed order.
std::vector<TheoremCheck> runAllChecks(const Corpus& corpus, const Limits& limits = {});
std::vector<std::string> theoremIds();

/// Factors of a ring built as an iterated product; a single entry otherwise.
std::vector<RingPtr> productFactors(const RingPtr& ring);
/// Max(A) = {m1, m2}, Jac(A) = 0 and both A/m_i are fields, so A = A/m1 x A/m2.
bool isProductOfTwoFields(const RingPtr& ring, const IdealLattice& lattice, const Limits& limits = {});

/// n = p^3 or n = p q with p != q.
bool znArithmeticPredicate(std::uint64_t n);
/// n prime or n = p^2: cases the characterization does not address explicitly.
bool znBoundary(std::uint64_t n);

struct ZnRow {
  std::uint64_t n = 0;
  bool engine = false;      // every proper ideal of Z_n is weakly 1-absorbing prime
  bool arithmetic = false;  // znArithmeticPredicate(n)
  bool boundary = false;
  std::optional<std::string> failing_ideal;
  std::vector<Elem> witness;

  bool agrees() const { return engine == arithmetic; }
};
std::vector<ZnRow> znClassification(std::uint64_t max_n, const Limits& limits = {});

}  // namespace idealis
