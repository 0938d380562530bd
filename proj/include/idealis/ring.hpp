#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealis/error.hpp"
#include "idealis/expr.hpp"

namespace idealis {

using Elem = std::uint32_t;

/// Resource limits shared by every constructor and enumerator.
struct Limits {
  std::size_t element_cap = 1024;
  std::size_t lattice_cap = 100000;
  std::size_t search_cap = 64;

  /// Defaults, with IDEALIS_CAP (if set and numeric) replacing the element cap.
  static Limits fromEnvironment();
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Links from a derived ring back to the rings it was built from. Used to name
/// elements and to resolve element literals against the construction.
struct RingStructure {
  std::vector<RingPtr> parts;  // Product: {left, right}; Quotient/Localize: {base}; Idealize: {base, module}
  std::vector<Elem> lift;      // base element -> element of this ring (or of the module, for Idealize)
  std::vector<Elem> rep;       // element of this ring -> least base element mapping to it
};

/// A commutative ring with 1 != 0 on the elements {0, ..., n-1}.
///
/// Operation tables are dense and immutable. The ring axioms are verified once in
/// `create`; a table that fails any axiom is rejected with InvariantViolation.
class FiniteRing {
 public:
  static RingPtr create(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                        RingExpr provenance, RingStructure structure = {});

  /// Builds a ring without running the axiom checks. Only for fault-injection tests.
  static RingPtr uncheckedForTesting(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                                     Elem one, RingExpr provenance, RingStructure structure = {});

  std::size_t size() const { return n_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t k) const;

  std::span<const Elem> mulRow(Elem a) const { return {mul_.data() + a * n_, n_}; }
  std::span<const Elem> addRow(Elem a) const { return {add_.data() + a * n_, n_}; }

  bool isUnit(Elem a) const { return is_unit_[a] != 0; }
  const std::vector<Elem>& units() const { return units_; }
  const std::vector<Elem>& nonunits() const { return nonunits_; }
  /// Non-zero-divisors. Over a finite ring these are exactly the units.
  std::vector<Elem> regularElements() const;
  std::optional<Elem> inverse(Elem a) const;
  bool isField() const { return units_.size() + 1 == n_; }

  /// Small generating set of the additive group, chosen greedily by index.
  const std::vector<Elem>& additiveGenerators() const { return additive_gens_; }

  const RingExpr& provenance() const { return provenance_; }
  const RingStructure& structure() const { return structure_; }

  /// Human-readable element name, e.g. "4", "(1,2)", "1+x".
  std::string elementName(Elem a) const;
  /// Element literal in the construction language, accepted back by the parser.
  std::string elementLiteral(Elem a) const;
  ElemLit toLiteral(Elem a) const;

 private:
  FiniteRing() = default;
  void finish();
  void verifyAxioms() const;
  std::string formatElement(Elem a, bool literal) const;

  std::size_t n_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<char> is_unit_;
  std::vector<Elem> units_;
  std::vector<Elem> nonunits_;
  std::vector<Elem> additive_gens_;
  RingExpr provenance_;
  RingStructure structure_;
};

/// Unital ring homomorphism, verified pointwise on construction.
class Homomorphism {
 public:
  static Homomorphism make(RingPtr source, RingPtr target, std::vector<Elem> map);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  Elem operator()(Elem a) const { return map_[a]; }
  std::span<const Elem> map() const { return map_; }

  std::vector<Elem> kernel() const;
  std::vector<Elem> image() const;
  bool isInjective() const;
  bool isSurjective() const;
  /// f(x) is a nonunit for every nonunit x.
  bool preservesNonunits() const;

 private:
  Homomorphism(RingPtr source, RingPtr target, std::vector<Elem> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  RingPtr source_;
  RingPtr target_;
  std::vector<Elem> map_;
};

/// A ring together with the canonical map into it from the ring it was derived from.
struct DerivedRing {
  RingPtr ring;
  Homomorphism map;
};

RingPtr makeZn(std::uint64_t n, const Limits& limits = {});
/// Element (i, j) has index i * right.size() + j.
RingPtr makeProduct(const RingPtr& left, const RingPtr& right, const Limits& limits = {});
/// F_p[x,y]/(x^2, xy, y^2); element a + b x + c y has index a + b p + c p^2.
RingPtr makeLocalAlgebra(std::uint64_t p, const Limits& limits = {});
/// Ring of fractions S^{-1}A built from pair classes (a, s) ~ (b, t) iff v(at - bs) = 0 for some v in S.
DerivedRing makeLocalization(const RingPtr& ring, std::span<const Elem> multiplicative_set,
                             const Limits& limits = {});

/// Lexicographically least ring isomorphism from `a` to `b`, or nullopt if none exists.
std::optional<Homomorphism> isomorphismSearch(const RingPtr& a, const RingPtr& b, const Limits& limits = {});

bool isPrimeNumber(std::uint64_t n);

}  // namespace idealis
