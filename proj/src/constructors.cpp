#include <array>
#include <algorithm>
#include <numeric>
#include <string>

#include "idealis/construct.hpp"
#include "idealis/ring.hpp"

namespace idealis {

namespace {

void requireWithinCap(std::uint64_t size, const Limits& limits, const char* what) {
  if (size > limits.element_cap) {
    throw Error(ErrorKind::CapExceeded, std::string(what) + " would have " + std::to_string(size) +
                                            " elements, above the cap of " + std::to_string(limits.element_cap));
  }
}

std::vector<ElemLit> literalsOf(const FiniteRing& ring, std::span<const Elem> elems) {
  std::vector<ElemLit> lits;
  lits.reserve(elems.size());
  for (Elem e : elems) lits.push_back(ring.toLiteral(e));
  return lits;
}

}  // namespace

RingPtr makeZn(std::uint64_t n, const Limits& limits) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Z_n needs n >= 2, got " + std::to_string(n));
  requireWithinCap(n, limits, "Z_n");
  const auto size = static_cast<std::size_t>(n);
  std::vector<Elem> add(size * size), mul(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      add[a * size + b] = static_cast<Elem>((a + b) % size);
      mul[a * size + b] = static_cast<Elem>((a * b) % size);
    }
  }
  return FiniteRing::create(size, std::move(add), std::move(mul), 0, 1, RingExpr::zn(n));
}

RingPtr makeProduct(const RingPtr& left, const RingPtr& right, const Limits& limits) {
  const std::size_t nl = left->size(), nr = right->size();
  requireWithinCap(static_cast<std::uint64_t>(nl) * nr, limits, "product");
  const std::size_t n = nl * nr;
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem a = 0; a < n; ++a) {
    const Elem a1 = a / nr, a2 = a % nr;
    for (Elem b = 0; b < n; ++b) {
      const Elem b1 = b / nr, b2 = b % nr;
      add[a * n + b] = static_cast<Elem>(left->add(a1, b1) * nr + right->add(a2, b2));
      mul[a * n + b] = static_cast<Elem>(left->mul(a1, b1) * nr + right->mul(a2, b2));
    }
  }
  RingStructure structure;
  structure.parts = {left, right};
  const auto zero = static_cast<Elem>(left->zero() * nr + right->zero());
  const auto one = static_cast<Elem>(left->one() * nr + right->one());
  return FiniteRing::create(n, std::move(add), std::move(mul), zero, one,
                            RingExpr::product(left->provenance(), right->provenance()), std::move(structure));
}

RingPtr makeLocalAlgebra(std::uint64_t p, const Limits& limits) {
  if (!isPrimeNumber(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > limits.element_cap) requireWithinCap(p, limits, "local algebra");
  requireWithinCap(p * p * p, limits, "local algebra");
  const auto q = static_cast<Elem>(p);
  const std::size_t n = static_cast<std::size_t>(p * p * p);
  auto coords = [q](Elem e) { return std::array<Elem, 3>{e % q, (e / q) % q, e / (q * q)}; };
  auto index = [q](Elem a, Elem b, Elem c) { return static_cast<Elem>(a % q + (b % q) * q + (c % q) * q * q); };
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem u = 0; u < n; ++u) {
    const auto [a, b, c] = coords(u);
    for (Elem v = 0; v < n; ++v) {
      const auto [d, e, f] = coords(v);
      add[u * n + v] = index(a + d, b + e, c + f);
      // (a + bx + cy)(d + ex + fy) = ad + (ae + bd)x + (af + cd)y since x^2 = xy = y^2 = 0
      mul[u * n + v] = index(a * d, a * e + b * d, a * f + c * d);
    }
  }
  return FiniteRing::create(n, std::move(add), std::move(mul), 0, 1, RingExpr::localAlg(p));
}

DerivedRing makeLocalization(const RingPtr& ring, std::span<const Elem> multiplicative_set, const Limits& limits) {
  const FiniteRing& a = *ring;
  const std::size_t n = a.size();
  std::vector<Elem> s(multiplicative_set.begin(), multiplicative_set.end());
  for (Elem e : s) {
    if (e >= n) throw Error(ErrorKind::ElementOutOfRange, "element " + std::to_string(e) + " is not in the ring");
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (std::binary_search(s.begin(), s.end(), a.zero())) {
    throw Error(ErrorKind::ZeroInS, "the multiplicative set contains 0");
  }
  if (!std::binary_search(s.begin(), s.end(), a.one())) {
    throw Error(ErrorKind::NotMultClosed, "the multiplicative set does not contain 1");
  }
  std::vector<int> s_index(n, -1);
  for (std::size_t i = 0; i < s.size(); ++i) s_index[s[i]] = static_cast<int>(i);
  for (Elem x : s) {
    for (Elem y : s) {
      if (s_index[a.mul(x, y)] < 0) {
        throw Error(ErrorKind::NotMultClosed, std::to_string(x) + " * " + std::to_string(y) + " leaves the set");
      }
    }
  }

  // (a, s) ~ (b, t) iff v(at - bs) = 0 for some v in S, i.e. at - bs lies in
  // K = { c | vc = 0 for some v in S }.
  std::vector<char> killed(n, 0);
  for (Elem c = 0; c < n; ++c) {
    for (Elem v : s) {
      if (a.mul(v, c) == a.zero()) {
        killed[c] = 1;
        break;
      }
    }
  }
  auto equivalent = [&](Elem x, Elem sx, Elem y, Elem sy) { return killed[a.sub(a.mul(x, sy), a.mul(y, sx))] != 0; };

  const std::size_t m = s.size();
  std::vector<Elem> cls(n * m, 0);
  struct Pair {
    Elem num, den;
  };
  std::vector<Pair> reps;
  auto assign = [&](Elem x, std::size_t si) {
    const Elem sx = s[si];
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (equivalent(x, sx, reps[c].num, reps[c].den)) {
        cls[x * m + si] = static_cast<Elem>(c);
        return;
      }
    }
    cls[x * m + si] = static_cast<Elem>(reps.size());
    reps.push_back({x, sx});
  };
  const auto one_index = static_cast<std::size_t>(s_index[a.one()]);
  for (Elem x = 0; x < n; ++x) assign(x, one_index);
  for (std::size_t si = 0; si < m; ++si) {
    if (si == one_index) continue;
    for (Elem x = 0; x < n; ++x) assign(x, si);
  }

  const std::size_t k = reps.size();
  requireWithinCap(k, limits, "localization");
  std::vector<Elem> add(k * k), mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto [x, sx] = reps[i];
      const auto [y, sy] = reps[j];
      const auto den = static_cast<std::size_t>(s_index[a.mul(sx, sy)]);
      add[i * k + j] = cls[a.add(a.mul(x, sy), a.mul(y, sx)) * m + den];
      mul[i * k + j] = cls[a.mul(x, y) * m + den];
    }
  }
  std::vector<Elem> canonical(n);
  for (Elem x = 0; x < n; ++x) canonical[x] = cls[x * m + one_index];

  RingStructure structure;
  structure.parts = {ring};
  structure.lift = canonical;
  structure.rep.assign(k, 0);
  std::vector<char> seen(k, 0);
  for (std::size_t c = 0; c < k; ++c) structure.rep[c] = reps[c].num;
  for (Elem x = 0; x < n; ++x) {
    if (!seen[canonical[x]]) {
      seen[canonical[x]] = 1;
      structure.rep[canonical[x]] = x;
    }
  }
  auto local = FiniteRing::create(k, std::move(add), std::move(mul), cls[a.zero() * m + one_index],
                                  cls[a.one() * m + one_index],
                                  RingExpr::localize(a.provenance(), literalsOf(a, s)), std::move(structure));
  auto map = Homomorphism::make(ring, local, std::move(canonical));
  for (Elem v : s) {
    if (!local->isUnit(map(v))) {
      throw Error(ErrorKind::InvariantViolation, "image of " + std::to_string(v) + " is not a unit");
    }
  }
  const auto kernel = map.kernel();
  for (Elem c = 0; c < n; ++c) {
    if (std::binary_search(kernel.begin(), kernel.end(), c) != (killed[c] != 0)) {
      throw Error(ErrorKind::InvariantViolation, "kernel of the canonical map differs from {a | sa = 0}");
    }
  }
  return DerivedRing{std::move(local), std::move(map)};
}

DerivedRing makeQuotient(const RingPtr& ring, const Ideal& q) {
  if (q.ring() != ring) throw Error(ErrorKind::RingMismatch, "ideal belongs to a different ring");
  const FiniteRing& a = *ring;
  const std::size_t n = a.size();
  std::vector<Elem> coset_min(n);
  for (Elem x = 0; x < n; ++x) {
    Elem best = x;
    for (Elem e : q.elements()) best = std::min(best, a.add(x, e));
    coset_min[x] = best;
  }
  std::vector<Elem> reps;
  std::vector<Elem> index_of(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (coset_min[x] == x) {
      index_of[x] = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
  }
  std::vector<Elem> projection(n);
  for (Elem x = 0; x < n; ++x) projection[x] = index_of[coset_min[x]];

  const std::size_t k = reps.size();
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "quotient by the whole ring is the zero ring");
  std::vector<Elem> add(k * k), mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      add[i * k + j] = projection[a.add(reps[i], reps[j])];
      mul[i * k + j] = projection[a.mul(reps[i], reps[j])];
    }
  }
  RingStructure structure;
  structure.parts = {ring};
  structure.lift = projection;
  structure.rep = reps;
  auto quotient = FiniteRing::create(k, std::move(add), std::move(mul), projection[a.zero()], projection[a.one()],
                                     RingExpr::quotient(a.provenance(), literalsOf(a, q.generators())),
                                     std::move(structure));
  auto map = Homomorphism::make(ring, quotient, std::move(projection));
  if (map.kernel() != q.elements()) {
    throw Error(ErrorKind::InvariantViolation, "kernel of the projection differs from the quotienting ideal");
  }
  return DerivedRing{std::move(quotient), std::move(map)};
}

RingPtr makeIdealization(const RingPtr& ring, const Ideal& j, const Limits& limits) {
  if (j.ring() != ring) throw Error(ErrorKind::RingMismatch, "ideal belongs to a different ring");
  if (!j.isProper()) throw Error(ErrorKind::ImproperIdeal, "the module A/J needs a proper ideal J");
  const FiniteRing& a = *ring;
  const std::size_t na = a.size();
  const std::size_t nm = na / j.size();
  requireWithinCap(static_cast<std::uint64_t>(na) * nm, limits, "idealization");
  auto module = makeQuotient(ring, j);
  const FiniteRing& m = *module.ring;
  const auto& act = module.map;  // a . m = pi(a) m

  const std::size_t n = na * nm;
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem u = 0; u < n; ++u) {
    const Elem x = u / nm, mx = u % nm;
    for (Elem v = 0; v < n; ++v) {
      const Elem y = v / nm, my = v % nm;
      add[u * n + v] = static_cast<Elem>(a.add(x, y) * nm + m.add(mx, my));
      const Elem cross = m.add(m.mul(act(x), my), m.mul(act(y), mx));
      mul[u * n + v] = static_cast<Elem>(a.mul(x, y) * nm + cross);
    }
  }
  RingStructure structure;
  structure.parts = {ring, module.ring};
  structure.lift = std::vector<Elem>(act.map().begin(), act.map().end());
  const auto zero = static_cast<Elem>(a.zero() * nm + m.zero());
  const auto one = static_cast<Elem>(a.one() * nm + m.zero());
  auto ext = FiniteRing::create(n, std::move(add), std::move(mul), zero, one,
                                RingExpr::idealize(a.provenance(), literalsOf(a, j.generators())),
                                std::move(structure));
  for (Elem u = 0; u < n; ++u) {
    if (ext->isUnit(u) != a.isUnit(u / static_cast<Elem>(nm))) {
      throw Error(ErrorKind::InvariantViolation,
                  "unit status of " + ext->elementName(u) + " differs from its first coordinate");
    }
  }
  return ext;
}

const RingPtr& idealizationModule(const FiniteRing& idealization) {
  if (idealization.provenance().kind != RingExpr::Kind::Idealize || idealization.structure().parts.size() != 2) {
    throw Error(ErrorKind::InvalidArgument, "ring was not built by makeIdealization");
  }
  return idealization.structure().parts[1];
}

Homomorphism idealizationInclusion(const RingPtr& idealization) {
  const auto& base = idealization->structure().parts.at(0);
  const auto nm = static_cast<Elem>(idealizationModule(*idealization)->size());
  std::vector<Elem> map(base->size());
  for (Elem a = 0; a < base->size(); ++a) map[a] = a * nm;
  return Homomorphism::make(base, idealization, std::move(map));
}

Ideal idealizeIdeal(const RingPtr& idealization, const Ideal& p) {
  const auto& base = idealization->structure().parts.at(0);
  if (p.ring() != base) throw Error(ErrorKind::RingMismatch, "ideal is not an ideal of the base ring");
  const auto nm = static_cast<Elem>(idealizationModule(*idealization)->size());
  std::vector<Elem> elems;
  for (Elem e : p.elements()) {
    for (Elem m = 0; m < nm; ++m) elems.push_back(e * nm + m);
  }
  std::sort(elems.begin(), elems.end());
  verifyIdealSet(*idealization, elems);
  return Ideal::fromElements(idealization, std::move(elems));
}

Ideal moduleAnnihilator(const RingPtr& idealization) {
  const auto& base = idealization->structure().parts.at(0);
  const auto& module = idealizationModule(*idealization);
  const auto& act = idealization->structure().lift;
  std::vector<Elem> ann;
  for (Elem a = 0; a < base->size(); ++a) {
    bool kills = true;
    for (Elem m = 0; m < module->size() && kills; ++m) kills = module->mul(act[a], m) == module->zero();
    if (kills) ann.push_back(a);
  }
  verifyIdealSet(*base, ann);
  return Ideal::fromElements(base, std::move(ann));
}

}  // namespace idealis
