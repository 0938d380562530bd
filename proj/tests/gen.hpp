#pragma once

// Hand-rolled generators for the property tests. A fixed seed keeps every run identical.

#include <algorithm>
#include <random>
#include <vector>

#include "idealis/construct.hpp"
#include "idealis/dsl.hpp"
#include "idealis/ideal.hpp"

namespace gen {

using namespace idealis;

class Gen {
 public:
  explicit Gen(std::uint32_t seed = 20240611) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

  /// A ring of at most `max_size` elements drawn from every constructor.
  RingPtr ring(std::size_t max_size = 32, int depth = 2) {
    for (;;) {
      const std::size_t pick = depth > 0 ? below(6) : 0;
      switch (pick) {
        case 0: return makeZn(between(2, std::min<std::size_t>(max_size, 24)));
        case 1: {
          if (max_size < 4) continue;
          RingPtr a = ring(max_size / 2, depth - 1);
          RingPtr b = ring(max_size / a->size(), depth - 1);
          if (a->size() * b->size() > max_size) continue;
          return makeProduct(a, b);
        }
        case 2: {
          RingPtr a = ring(max_size * 2, depth - 1);
          const Ideal q = ideal(a);
          if (!q.isProper() || a->size() / q.size() > max_size) continue;
          return makeQuotient(a, q).ring;
        }
        case 3: {
          if (max_size < 8) continue;
          return makeLocalAlgebra(2);
        }
        case 4: {
          const std::size_t n = between(2, 6);
          RingPtr a = makeZn(n);
          const Ideal j = ideal(a);
          if (!j.isProper() || n * (n / j.size()) > max_size) continue;
          return makeIdealization(a, j);
        }
        default: {
          RingPtr a = ring(max_size, depth - 1);
          const auto s = cyclicSet(a, static_cast<Elem>(below(a->size())));
          if (s.empty()) continue;
          return makeLocalization(a, s).ring;
        }
      }
    }
  }

  /// Ideal generated by zero, one or two random elements.
  Ideal ideal(const RingPtr& r) {
    std::vector<Elem> gens;
    const std::size_t k = below(3);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(static_cast<Elem>(below(r->size())));
    return idealGen(r, gens);
  }

  Ideal properIdeal(const RingPtr& r) {
    for (;;) {
      Ideal i = ideal(r);
      if (i.isProper()) return i;
    }
  }

  Elem element(const RingPtr& r) { return static_cast<Elem>(below(r->size())); }

  /// {1, s, s^2, ...}, or empty if a power of s is zero.
  static std::vector<Elem> cyclicSet(const RingPtr& r, Elem s) {
    std::vector<Elem> powers{r->one()};
    Elem t = s;
    while (std::find(powers.begin(), powers.end(), t) == powers.end()) {
      powers.push_back(t);
      t = r->mul(t, s);
    }
    if (std::find(powers.begin(), powers.end(), r->zero()) != powers.end()) return {};
    std::sort(powers.begin(), powers.end());
    return powers;
  }

  /// Syntax tree of depth at most `depth`; literals are arbitrary, so the tree need not elaborate.
  RingExpr expr(int depth) {
    const std::size_t pick = depth > 0 ? below(6) : below(2);
    switch (pick) {
      case 0: return RingExpr::zn(between(0, 200));
      case 1: return RingExpr::localAlg(between(0, 13));
      case 2: return RingExpr::product(expr(depth - 1), expr(depth - 1));
      case 3: return RingExpr::quotient(expr(depth - 1), lits(2));
      case 4: return RingExpr::localize(expr(depth - 1), lits(2));
      default: return RingExpr::idealize(expr(depth - 1), lits(2));
    }
  }

  std::vector<ElemLit> lits(int depth) {
    std::vector<ElemLit> out;
    const std::size_t k = below(4);
    for (std::size_t i = 0; i < k; ++i) out.push_back(lit(depth));
    return out;
  }

  ElemLit lit(int depth) {
    if (depth <= 0 || below(3) != 0) return ElemLit::scalar(between(0, 99));
    return ElemLit::pair(lit(depth - 1), lit(depth - 1));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace gen
