#pragma once

#include "idealis/ideal.hpp"
#include "idealis/ring.hpp"

namespace idealis {

/// A/Q on additive cosets; each coset is represented by its least element index,
/// and cosets are numbered in increasing order of representative.
DerivedRing makeQuotient(const RingPtr& ring, const Ideal& q);

/// Trivial extension A ⋉ M with M = A/J as an A-module:
/// (x, m)(y, m') = (xy, x m' + y m). Element (a, m) has index a * |M| + m.
RingPtr makeIdealization(const RingPtr& ring, const Ideal& j, const Limits& limits = {});

/// The module A/J underlying an idealization built by makeIdealization.
const RingPtr& idealizationModule(const FiniteRing& idealization);

/// a -> (a, 0), the inclusion of A into A ⋉ M.
Homomorphism idealizationInclusion(const RingPtr& idealization);

/// P ⋉ M = { (p, m) | p in P } inside A ⋉ M.
Ideal idealizeIdeal(const RingPtr& idealization, const Ideal& p);

/// ann(M) for the module of an idealization.
Ideal moduleAnnihilator(const RingPtr& idealization);

}  // namespace idealis
