#include "idealis/ideal.hpp"

#include <algorithm>
#include <map>

namespace idealis {

namespace {

std::vector<Elem> sortedUnique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void requireSameRing(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::RingMismatch, "ideals belong to different rings");
}

// Additive subgroup generated by two subgroups: every element of I + J is i + j.
std::vector<Elem> subgroupSum(const FiniteRing& ring, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<char> seen(ring.size(), 0);
  std::vector<Elem> out;
  for (Elem x : a) {
    for (Elem y : b) {
      const Elem s = ring.add(x, y);
      if (!seen[s]) {
        seen[s] = 1;
        out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> principalElements(const FiniteRing& ring, Elem a) {
  const auto row = ring.mulRow(a);
  return sortedUnique(std::vector<Elem>(row.begin(), row.end()));
}

std::vector<Elem> generatedElements(const FiniteRing& ring, std::span<const Elem> generators) {
  std::vector<Elem> current{ring.zero()};
  for (Elem g : generators) {
    if (g >= ring.size()) {
      throw Error(ErrorKind::ElementOutOfRange, "generator " + std::to_string(g) + " is not in the ring");
    }
    if (std::binary_search(current.begin(), current.end(), g)) continue;
    current = subgroupSum(ring, current, principalElements(ring, g));
  }
  return current;
}

std::string joinGenerators(const Ideal& ideal, bool literal) {
  std::string out = "(";
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ",";
    out += literal ? ideal.r().elementLiteral(gens[i]) : ideal.r().elementName(gens[i]);
  }
  if (gens.empty()) out += literal ? ideal.r().elementLiteral(ideal.r().zero()) : ideal.r().elementName(ideal.r().zero());
  return out + ")";
}

}  // namespace

Ideal Ideal::fromParts(RingPtr ring, std::vector<Elem> sorted_elements, std::vector<Elem> generators) {
  return Ideal(std::move(ring), std::move(sorted_elements), std::move(generators));
}

Ideal Ideal::fromElements(RingPtr ring, std::vector<Elem> sorted_elements) {
  // Greedy generators: take the least element not yet in the span.
  const FiniteRing& r = *ring;
  std::vector<Elem> gens;
  std::vector<Elem> span{r.zero()};
  for (Elem e : sorted_elements) {
    if (span.size() == sorted_elements.size()) break;
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = subgroupSum(r, span, principalElements(r, e));
  }
  if (gens.empty()) gens.push_back(r.zero());
  return Ideal(std::move(ring), std::move(sorted_elements), std::move(gens));
}

bool Ideal::contains(Elem a) const { return std::binary_search(elements_.begin(), elements_.end(), a); }

std::vector<char> Ideal::mask() const {
  std::vector<char> m(ring_->size(), 0);
  for (Elem e : elements_) m[e] = 1;
  return m;
}

bool Ideal::isSubsetOf(const Ideal& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::string Ideal::label() const { return joinGenerators(*this, false); }
std::string Ideal::literal() const { return joinGenerators(*this, true); }

bool isIdealSet(const FiniteRing& ring, std::span<const Elem> elements) {
  if (elements.empty() || !std::is_sorted(elements.begin(), elements.end())) return false;
  std::vector<char> in(ring.size(), 0);
  for (Elem e : elements) in[e] = 1;
  if (!in[ring.zero()]) return false;
  for (Elem x : elements) {
    for (Elem y : elements) {
      if (!in[ring.add(x, y)]) return false;
    }
    // Closure under the additive generators of A gives closure under all of A.
    for (Elem g : ring.additiveGenerators()) {
      if (!in[ring.mul(g, x)]) return false;
    }
  }
  return true;
}

void verifyIdealSet(const FiniteRing& ring, std::span<const Elem> elements) {
  if (!isIdealSet(ring, elements)) throw Error(ErrorKind::InvariantViolation, "element set is not an ideal");
}

Ideal idealGen(const RingPtr& ring, std::span<const Elem> generators) {
  auto elems = generatedElements(*ring, generators);
  std::vector<Elem> gens;
  for (Elem g : generators) {
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  if (gens.empty()) gens.push_back(ring->zero());
  return Ideal::fromParts(ring, std::move(elems), std::move(gens));
}

Ideal principalIdeal(const RingPtr& ring, Elem a) {
  if (a >= ring->size()) throw Error(ErrorKind::ElementOutOfRange, "element " + std::to_string(a) + " is not in the ring");
  return Ideal::fromParts(ring, principalElements(*ring, a), {a});
}

Ideal zeroIdeal(const RingPtr& ring) { return Ideal::fromParts(ring, {ring->zero()}, {ring->zero()}); }

Ideal wholeRing(const RingPtr& ring) {
  std::vector<Elem> all(ring->size());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  return Ideal::fromParts(ring, std::move(all), {ring->one()});
}

Ideal idealSum(const Ideal& a, const Ideal& b) {
  requireSameRing(a, b);
  auto gens = a.generators();
  for (Elem g : b.generators()) {
    if (!a.contains(g) && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  return Ideal::fromParts(a.ring(), subgroupSum(a.r(), a.elements(), b.elements()), std::move(gens));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
  requireSameRing(a, b);
  const FiniteRing& r = a.r();
  std::vector<Elem> products;
  products.reserve(a.size() * b.size());
  for (Elem x : a.elements()) {
    for (Elem y : b.elements()) products.push_back(r.mul(x, y));
  }
  products = sortedUnique(std::move(products));
  // The product set is closed under multiplication by A, so its additive span is the ideal IJ.
  std::vector<char> seen(r.size(), 0);
  std::vector<Elem> elems{r.zero()};
  seen[r.zero()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem g : products) {
      const Elem s = r.add(elems[i], g);
      if (!seen[s]) {
        seen[s] = 1;
        elems.push_back(s);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Ideal::fromElements(a.ring(), std::move(elems));
}

Ideal idealIntersect(const Ideal& a, const Ideal& b) {
  requireSameRing(a, b);
  std::vector<Elem> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return Ideal::fromElements(a.ring(), std::move(common));
}

Ideal idealPower(const Ideal& a, std::size_t k) {
  if (k == 0) return wholeRing(a.ring());
  Ideal result = a;
  for (std::size_t i = 1; i < k; ++i) result = idealProduct(result, a);
  return result;
}

Ideal scaleIdeal(Elem x, const Ideal& a) {
  std::vector<Elem> out;
  out.reserve(a.size());
  for (Elem e : a.elements()) out.push_back(a.r().mul(x, e));
  return Ideal::fromElements(a.ring(), sortedUnique(std::move(out)));
}

Ideal colon(const Ideal& p, Elem x) {
  const FiniteRing& r = p.r();
  const auto in = p.mask();
  std::vector<Elem> out;
  for (Elem a = 0; a < r.size(); ++a) {
    if (in[r.mul(a, x)]) out.push_back(a);
  }
  verifyIdealSet(r, out);
  return Ideal::fromElements(p.ring(), std::move(out));
}

Ideal colonIdeal(const Ideal& p, const Ideal& j) {
  requireSameRing(p, j);
  const FiniteRing& r = p.r();
  const auto in = p.mask();
  std::vector<Elem> out;
  for (Elem a = 0; a < r.size(); ++a) {
    bool inside = true;
    for (Elem e : j.elements()) {
      if (!in[r.mul(a, e)]) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(a);
  }
  verifyIdealSet(r, out);
  return Ideal::fromElements(p.ring(), std::move(out));
}

Ideal annihilator(const RingPtr& ring, Elem x) { return colon(zeroIdeal(ring), x); }
Ideal annihilator(const Ideal& j) { return colonIdeal(zeroIdeal(j.ring()), j); }

Ideal radical(const Ideal& p) {
  const FiniteRing& r = p.r();
  const auto in = p.mask();
  std::vector<Elem> out;
  for (Elem a = 0; a < r.size(); ++a) {
    Elem power = a;
    for (std::size_t k = 1; k <= r.size(); ++k) {
      if (in[power]) {
        out.push_back(a);
        break;
      }
      power = r.mul(power, a);
    }
  }
  verifyIdealSet(r, out);
  return Ideal::fromElements(p.ring(), std::move(out));
}

Ideal imageIdeal(const Homomorphism& f, const Ideal& i) {
  if (i.ring() != f.source()) throw Error(ErrorKind::RingMismatch, "ideal is not in the source ring");
  std::vector<Elem> img;
  for (Elem e : i.elements()) img.push_back(f(e));
  img = sortedUnique(std::move(img));
  auto elems = generatedElements(*f.target(), img);
  return Ideal::fromElements(f.target(), std::move(elems));
}

Ideal preimageIdeal(const Homomorphism& f, const Ideal& i) {
  if (i.ring() != f.target()) throw Error(ErrorKind::RingMismatch, "ideal is not in the target ring");
  const auto in = i.mask();
  std::vector<Elem> out;
  for (Elem a = 0; a < f.source()->size(); ++a) {
    if (in[f(a)]) out.push_back(a);
  }
  verifyIdealSet(*f.source(), out);
  return Ideal::fromElements(f.source(), std::move(out));
}

// Every ideal of a finite ring is a finite sum of principal ideals, so the
// lattice is the closure of the principal ideals under pairwise sums.
IdealLattice IdealLattice::enumerate(const RingPtr& ring, const Limits& limits) {
  const FiniteRing& r = *ring;
  std::map<std::vector<Elem>, std::vector<Elem>> found;  // elements -> generators
  std::vector<std::vector<Elem>> order;
  auto record = [&](std::vector<Elem> elems, std::vector<Elem> gens) {
    auto [it, inserted] = found.emplace(std::move(elems), std::move(gens));
    if (inserted) {
      if (found.size() > limits.lattice_cap) {
        throw Error(ErrorKind::LatticeCapExceeded,
                    "more than " + std::to_string(limits.lattice_cap) + " ideals");
      }
      order.push_back(it->first);
    }
  };
  for (Elem a = 0; a < r.size(); ++a) record(principalElements(r, a), {a});
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = order[i];
      const auto& b = order[j];
      if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
          std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        continue;
      }
      auto gens = found[order[j]];
      for (Elem g : found[order[i]]) gens.push_back(g);
      auto sum = subgroupSum(r, order[i], order[j]);
      record(std::move(sum), std::move(gens));
    }
  }

  IdealLattice lattice;
  lattice.ring_ = ring;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> entries(found.begin(), found.end());
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  for (auto& [elems, gens] : entries) lattice.ideals_.push_back(Ideal::fromParts(ring, elems, gens));

  const std::size_t count = lattice.ideals_.size();
  lattice.subset_.assign(count * count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      lattice.subset_[i * count + j] = lattice.ideals_[i].isSubsetOf(lattice.ideals_[j]) ? 1 : 0;
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!lattice.ideals_[i].isProper()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < count && maximal; ++j) {
      maximal = j == i || !lattice.ideals_[j].isProper() || !lattice.contains(i, j);
    }
    if (maximal) lattice.maximal_.push_back(i);
  }
  return lattice;
}

std::vector<std::size_t> IdealLattice::properIndices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (ideals_[i].isProper()) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> IdealLattice::indexOf(std::span<const Elem> sorted_elements) const {
  const auto it = std::lower_bound(ideals_.begin(), ideals_.end(), sorted_elements, [](const Ideal& x, auto key) {
    if (x.size() != key.size()) return x.size() < key.size();
    return std::lexicographical_compare(x.elements().begin(), x.elements().end(), key.begin(), key.end());
  });
  if (it == ideals_.end() || !std::equal(it->elements().begin(), it->elements().end(), sorted_elements.begin(),
                                          sorted_elements.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - ideals_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> IdealLattice::coveringEdges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t count = ideals_.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !contains(i, j)) continue;
      bool covers = true;
      for (std::size_t k = 0; k < count && covers; ++k) {
        covers = k == i || k == j || !(contains(i, k) && contains(k, j));
      }
      if (covers) edges.emplace_back(i, j);
    }
  }
  return edges;
}

IdealLattice allIdeals(const RingPtr& ring, const Limits& limits) { return IdealLattice::enumerate(ring, limits); }

std::vector<Ideal> maximalIdeals(const IdealLattice& lattice) {
  std::vector<Ideal> out;
  for (std::size_t i : lattice.maximalIndices()) out.push_back(lattice[i]);
  return out;
}

Ideal jacobson(const IdealLattice& lattice) {
  Ideal jac = wholeRing(lattice.ring());
  for (std::size_t i : lattice.maximalIndices()) jac = idealIntersect(jac, lattice[i]);
  return jac;
}

Ideal jacobson(const RingPtr& ring, const Limits& limits) { return jacobson(allIdeals(ring, limits)); }

bool isReduced(const RingPtr& ring) { return radical(zeroIdeal(ring)).isZero(); }

bool isQuasiLocal(const IdealLattice& lattice) { return lattice.maximalIndices().size() == 1; }

bool isQuasiLocal(const RingPtr& ring, const Limits& limits) { return isQuasiLocal(allIdeals(ring, limits)); }

}  // namespace idealis
