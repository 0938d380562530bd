#pragma once

// Brute-force reference implementations. Everything here reads only the raw
// operation tables and does the dumbest exhaustive thing, so it shares no logic
// with the library beyond the FiniteRing table lookups.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "idealis/ring.hpp"

namespace oracle {

using idealis::Elem;
using idealis::FiniteRing;

inline bool ringAxioms(const FiniteRing& r) {
  const auto n = static_cast<Elem>(r.size());
  if (r.zero() == r.one()) return false;
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a || r.mul(a, r.one()) != a) return false;
    bool has_neg = false;
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a)) return false;
      if (r.add(a, b) == r.zero()) has_neg = true;
      for (Elem c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return false;
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return false;
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return false;
      }
    }
    if (!has_neg) return false;
  }
  return true;
}

inline std::vector<Elem> unitsByScan(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem a = 0; a < r.size(); ++a) {
    for (Elem b = 0; b < r.size(); ++b) {
      if (r.mul(a, b) == r.one()) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

inline std::vector<Elem> gcdUnits(std::uint64_t n) {
  std::vector<Elem> out;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) out.push_back(static_cast<Elem>(a));
  }
  return out;
}

inline std::size_t divisorCount(std::uint64_t n) {
  std::size_t d = 0;
  for (std::uint64_t k = 1; k <= n; ++k) d += n % k == 0;
  return d;
}

inline bool isIdeal(const FiniteRing& r, const std::vector<char>& in) {
  if (!in[r.zero()]) return false;
  for (Elem a = 0; a < r.size(); ++a) {
    if (!in[a]) continue;
    for (Elem b = 0; b < r.size(); ++b) {
      if (in[b] && !in[r.add(a, b)]) return false;
      if (!in[r.mul(a, b)]) return false;
    }
  }
  return true;
}

/// Every subset that is an ideal, as sorted element lists. Only for rings of at most 16 elements.
inline std::vector<std::vector<Elem>> idealsBySubsets(const FiniteRing& r) {
  const auto n = r.size();
  std::vector<std::vector<Elem>> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    if (!(bits & (1u << r.zero()))) continue;
    std::vector<char> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (bits >> i) & 1;
    if (!isIdeal(r, in)) continue;
    std::vector<Elem> elems;
    for (Elem i = 0; i < n; ++i) {
      if (in[i]) elems.push_back(i);
    }
    out.push_back(elems);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

struct Verdict {
  bool holds = true;
  std::vector<Elem> witness;
};

inline bool isUnit(const FiniteRing& r, Elem a) {
  for (Elem b = 0; b < r.size(); ++b) {
    if (r.mul(a, b) == r.one()) return true;
  }
  return false;
}

inline Verdict pairScan(const FiniteRing& r, const std::vector<char>& in, bool weak) {
  for (Elem x = 0; x < r.size(); ++x) {
    for (Elem y = 0; y < r.size(); ++y) {
      const Elem xy = r.mul(x, y);
      if (weak && xy == r.zero()) continue;
      if (in[xy] && !in[x] && !in[y]) return {false, {x, y}};
    }
  }
  return {};
}

inline Verdict prime(const FiniteRing& r, const std::vector<char>& in) { return pairScan(r, in, false); }
inline Verdict weaklyPrime(const FiniteRing& r, const std::vector<char>& in) { return pairScan(r, in, true); }

inline Verdict oneAbsorbing(const FiniteRing& r, const std::vector<char>& in, bool weak) {
  for (Elem x = 0; x < r.size(); ++x) {
    if (isUnit(r, x)) continue;
    for (Elem y = 0; y < r.size(); ++y) {
      if (isUnit(r, y)) continue;
      for (Elem z = 0; z < r.size(); ++z) {
        if (isUnit(r, z)) continue;
        const Elem xyz = r.mul(r.mul(x, y), z);
        if (weak && xyz == r.zero()) continue;
        if (in[xyz] && !in[r.mul(x, y)] && !in[z]) return {false, {x, y, z}};
      }
    }
  }
  return {};
}

inline Verdict twoAbsorbing(const FiniteRing& r, const std::vector<char>& in, bool weak) {
  for (Elem x = 0; x < r.size(); ++x) {
    for (Elem y = 0; y < r.size(); ++y) {
      for (Elem z = 0; z < r.size(); ++z) {
        const Elem xyz = r.mul(r.mul(x, y), z);
        if (weak && xyz == r.zero()) continue;
        if (in[xyz] && !in[r.mul(x, y)] && !in[r.mul(x, z)] && !in[r.mul(y, z)]) return {false, {x, y, z}};
      }
    }
  }
  return {};
}

/// Verdicts in the library's property order: P, wP, 1A, w1A, 2A, w2A.
inline std::vector<Verdict> allSix(const FiniteRing& r, const std::vector<char>& in) {
  return {prime(r, in),
          weaklyPrime(r, in),
          oneAbsorbing(r, in, false),
          oneAbsorbing(r, in, true),
          twoAbsorbing(r, in, false),
          twoAbsorbing(r, in, true)};
}

inline std::vector<char> maskOf(const FiniteRing& r, const std::vector<Elem>& elems) {
  std::vector<char> in(r.size(), 0);
  for (Elem e : elems) in[e] = 1;
  return in;
}

/// Number of classes of pairs (a, s) under (a, s) ~ (b, t) iff v(at - bs) = 0 for some v in S.
inline std::size_t localizationSize(const FiniteRing& r, const std::vector<Elem>& s) {
  const std::size_t m = s.size();
  std::vector<std::size_t> parent(r.size() * m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Elem a = 0; a < r.size(); ++a) {
    for (std::size_t i = 0; i < m; ++i) {
      for (Elem b = 0; b < r.size(); ++b) {
        for (std::size_t j = 0; j < m; ++j) {
          const Elem diff = r.add(r.mul(a, s[j]), r.neg(r.mul(b, s[i])));
          const bool equal = std::any_of(s.begin(), s.end(), [&](Elem v) { return r.mul(v, diff) == r.zero(); });
          if (equal) parent[find(a * m + i)] = find(b * m + j);
        }
      }
    }
  }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) classes += find(i) == i;
  return classes;
}

}  // namespace oracle
