#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idealis/ring.hpp"

namespace idealis {

/// An ideal of a finite ring, stored as its sorted element set.
///
/// Equality is element-set equality within the same ring object; the generator
/// list is informational and only used for labels.
class Ideal {
 public:
  /// Takes an element set already known to be an ideal and picks a short generator list.
  static Ideal fromElements(RingPtr ring, std::vector<Elem> sorted_elements);
  static Ideal fromParts(RingPtr ring, std::vector<Elem> sorted_elements, std::vector<Elem> generators);

  const RingPtr& ring() const { return ring_; }
  const FiniteRing& r() const { return *ring_; }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(Elem a) const;
  /// Membership table indexed by element.
  std::vector<char> mask() const;
  bool isProper() const { return elements_.size() < ring_->size(); }
  bool isZero() const { return elements_.size() == 1; }
  bool isSubsetOf(const Ideal& other) const;

  /// Generator label such as "(4)", "((1,0),(0,3))" or "(x,y)".
  std::string label() const;
  /// Same shape as `label` but in the parser's literal syntax.
  std::string literal() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

 private:
  Ideal(RingPtr ring, std::vector<Elem> elements, std::vector<Elem> generators)
      : ring_(std::move(ring)), elements_(std::move(elements)), generators_(std::move(generators)) {}

  RingPtr ring_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

/// Throws InvariantViolation unless `elements` (sorted) is closed under addition and ring multiplication.
void verifyIdealSet(const FiniteRing& ring, std::span<const Elem> elements);
bool isIdealSet(const FiniteRing& ring, std::span<const Elem> elements);

Ideal idealGen(const RingPtr& ring, std::span<const Elem> generators);
Ideal principalIdeal(const RingPtr& ring, Elem a);
Ideal zeroIdeal(const RingPtr& ring);
Ideal wholeRing(const RingPtr& ring);

Ideal idealSum(const Ideal& a, const Ideal& b);
/// Ideal generated by all pairwise products.
Ideal idealProduct(const Ideal& a, const Ideal& b);
Ideal idealIntersect(const Ideal& a, const Ideal& b);
Ideal idealPower(const Ideal& a, std::size_t k);
/// x * I as an ideal (I is an ideal, so xI is closed already).
Ideal scaleIdeal(Elem x, const Ideal& a);

/// (P : x) = { a | a x in P }.
Ideal colon(const Ideal& p, Elem x);
/// (P : J) = { a | a J subset P }.
Ideal colonIdeal(const Ideal& p, const Ideal& j);
Ideal annihilator(const RingPtr& ring, Elem x);
Ideal annihilator(const Ideal& j);
/// { a | a^k in P for some 1 <= k <= |A| }.
Ideal radical(const Ideal& p);

/// f(I) as the ideal it generates in the target.
Ideal imageIdeal(const Homomorphism& f, const Ideal& i);
Ideal preimageIdeal(const Homomorphism& f, const Ideal& i);

/// Every ideal of a finite ring, ordered by (size, elements).
class IdealLattice {
 public:
  static IdealLattice enumerate(const RingPtr& ring, const Limits& limits = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  std::size_t size() const { return ideals_.size(); }
  const std::vector<std::size_t>& maximalIndices() const { return maximal_; }
  std::vector<std::size_t> properIndices() const;

  std::optional<std::size_t> indexOf(std::span<const Elem> sorted_elements) const;
  std::optional<std::size_t> indexOf(const Ideal& ideal) const { return indexOf(ideal.elements()); }
  /// ideals()[i] subset of ideals()[j].
  bool contains(std::size_t i, std::size_t j) const { return subset_[i * ideals_.size() + j] != 0; }
  /// Hasse diagram edges (smaller, larger): strict containment with nothing in between.
  std::vector<std::pair<std::size_t, std::size_t>> coveringEdges() const;

 private:
  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::vector<std::size_t> maximal_;
  std::vector<char> subset_;
};

IdealLattice allIdeals(const RingPtr& ring, const Limits& limits = {});

std::vector<Ideal> maximalIdeals(const IdealLattice& lattice);
Ideal jacobson(const IdealLattice& lattice);
Ideal jacobson(const RingPtr& ring, const Limits& limits = {});
bool isReduced(const RingPtr& ring);
bool isQuasiLocal(const IdealLattice& lattice);
bool isQuasiLocal(const RingPtr& ring, const Limits& limits = {});

}  // namespace idealis
