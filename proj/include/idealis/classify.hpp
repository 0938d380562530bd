#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealis/ideal.hpp"

namespace idealis {

/// The six ideal classes, in the order used by every report and label.
enum class Property {
  Prime,
  WeaklyPrime,
  OneAbsorbingPrime,
  WeaklyOneAbsorbingPrime,
  TwoAbsorbing,
  WeaklyTwoAbsorbing,
};

inline constexpr std::array<Property, 6> kAllProperties = {
    Property::Prime,
    Property::WeaklyPrime,
    Property::OneAbsorbingPrime,
    Property::WeaklyOneAbsorbingPrime,
    Property::TwoAbsorbing,
    Property::WeaklyTwoAbsorbing,
};

/// JSON key, e.g. "weaklyOneAbsorbingPrime".
const char* propertyName(Property p);
/// Short code: P, wP, 1A, w1A, 2A, w2A.
const char* propertyCode(Property p);
/// One character per property for lattice labels (uppercase strong, lowercase weak).
char propertyLetter(Property p);
std::optional<Property> propertyFromName(std::string_view name);

/// Outcome of one exhaustive scan. `witness` holds the lexicographically least
/// violating pair or triple when `holds` is false.
struct Verdict {
  bool holds = true;
  std::vector<Elem> witness;
};

Verdict isPrime(const Ideal& p);
Verdict isWeaklyPrime(const Ideal& p);
Verdict isOneAbsorbingPrime(const Ideal& p);
Verdict isWeaklyOneAbsorbingPrime(const Ideal& p);
Verdict isTwoAbsorbing(const Ideal& p);
Verdict isWeaklyTwoAbsorbing(const Ideal& p);
Verdict decide(Property property, const Ideal& p);

/// Re-evaluates a witness against the raw tables: true iff it violates `property` for `p`.
bool witnessViolates(Property property, const Ideal& p, std::span<const Elem> witness);

/// Nonunits x, y, z with xyz = 0, xy not in P, z not in P.
struct TripleZero {
  Elem x = 0;
  Elem y = 0;
  Elem z = 0;
  friend bool operator==(const TripleZero&, const TripleZero&) = default;
};

/// All 1-triple zeros of a weakly 1-absorbing prime ideal, in lexicographic order.
/// Throws NotW1AP if `p` is not weakly 1-absorbing prime.
std::vector<TripleZero> find1TripleZeros(const Ideal& p);

struct PropertyReport {
  Ideal ideal;
  std::array<bool, 6> verdicts{};
  std::array<std::vector<Elem>, 6> witnesses;
  /// Set for the zero ideal: the classical 2-absorbing notion is only defined for nonzero ideals.
  bool zero_ideal_two_absorbing = false;

  bool holds(Property p) const { return verdicts[static_cast<std::size_t>(p)]; }
  const std::vector<Elem>& witness(Property p) const { return witnesses[static_cast<std::size_t>(p)]; }
  /// Six-character code such as "..Aa.t".
  std::string code() const;
};

PropertyReport classify(const Ideal& p);

/// Verdicts of the six equivalent conditions (i)..(vi) of the weak 1-absorbing
/// characterization. (i) is the definitional scan; (ii)-(iii) use colon ideals;
/// (iv)-(vi) quantify over proper ideals of `lattice`.
struct TmmConditions {
  std::array<bool, 6> holds{};
  bool allAgree() const;
};

/// Lattice-indexed products IJ and scalings xI, shared by every ideal of one ring.
class LatticeTables {
 public:
  explicit LatticeTables(const IdealLattice& lattice);

  const IdealLattice& lattice() const { return *lattice_; }
  std::size_t product(std::size_t i, std::size_t j) const { return product_[i * width_ + j]; }
  std::size_t scale(Elem x, std::size_t i) const { return scale_[x * width_ + i]; }

 private:
  const IdealLattice* lattice_;
  std::size_t width_;
  std::vector<std::size_t> product_;
  std::vector<std::size_t> scale_;
};

TmmConditions tmmCharacterize(const Ideal& p, const LatticeTables& tables);
TmmConditions tmmCharacterize(const Ideal& p, const IdealLattice& lattice);
/// Condition (ii) only: for nonunits x, y with xy not in P, (P : xy) = P ∪ (0 : xy).
bool tmmColonCondition(const Ideal& p);
/// Condition (vi) only: 0 != IJK ⊆ P forces IJ ⊆ P or K ⊆ P over proper ideals.
bool tmmIdealTripleCondition(const Ideal& p, const LatticeTables& tables);
bool tmmIdealTripleCondition(const Ideal& p, const IdealLattice& lattice);

/// Whether every proper ideal is weakly 1-absorbing prime; reports the first failure in lattice order.
struct AllProperW1ap {
  bool holds = true;
  std::optional<Ideal> failing;
  std::vector<Elem> witness;
};
AllProperW1ap allProperIdealsW1AP(const IdealLattice& lattice);

}  // namespace idealis
