#include "idealis/classify.hpp"

#include <algorithm>

namespace idealis {

const char* propertyName(Property p) {
  switch (p) {
    case Property::Prime: return "prime";
    case Property::WeaklyPrime: return "weaklyPrime";
    case Property::OneAbsorbingPrime: return "oneAbsorbingPrime";
    case Property::WeaklyOneAbsorbingPrime: return "weaklyOneAbsorbingPrime";
    case Property::TwoAbsorbing: return "twoAbsorbing";
    case Property::WeaklyTwoAbsorbing: return "weaklyTwoAbsorbing";
  }
  return "?";
}

const char* propertyCode(Property p) {
  switch (p) {
    case Property::Prime: return "P";
    case Property::WeaklyPrime: return "wP";
    case Property::OneAbsorbingPrime: return "1A";
    case Property::WeaklyOneAbsorbingPrime: return "w1A";
    case Property::TwoAbsorbing: return "2A";
    case Property::WeaklyTwoAbsorbing: return "w2A";
  }
  return "?";
}

char propertyLetter(Property p) {
  switch (p) {
    case Property::Prime: return 'P';
    case Property::WeaklyPrime: return 'p';
    case Property::OneAbsorbingPrime: return 'A';
    case Property::WeaklyOneAbsorbingPrime: return 'a';
    case Property::TwoAbsorbing: return 'T';
    case Property::WeaklyTwoAbsorbing: return 't';
  }
  return '?';
}

std::optional<Property> propertyFromName(std::string_view name) {
  for (Property p : kAllProperties) {
    if (name == propertyName(p) || name == propertyCode(p)) return p;
  }
  if (name == "1absPrime" || name == "1ap") return Property::OneAbsorbingPrime;
  if (name == "w1ap") return Property::WeaklyOneAbsorbingPrime;
  if (name == "2abs") return Property::TwoAbsorbing;
  if (name == "w2abs") return Property::WeaklyTwoAbsorbing;
  return std::nullopt;
}

namespace {

void requireProper(const Ideal& p) {
  if (!p.isProper()) throw Error(ErrorKind::ImproperIdeal, "the predicate is defined for proper ideals only");
}

// Pair scan for (weakly) prime. The condition is symmetric in x and y, so the
// least violating pair has x <= y.
Verdict scanPrime(const Ideal& p, bool weak) {
  requireProper(p);
  const FiniteRing& r = p.r();
  const auto in = p.mask();
  const auto n = static_cast<Elem>(r.size());
  for (Elem x = 0; x < n; ++x) {
    if (in[x]) continue;
    const auto row = r.mulRow(x);
    for (Elem y = x; y < n; ++y) {
      if (in[y]) continue;
      const Elem xy = row[y];
      if (in[xy] && (!weak || xy != r.zero())) return {false, {x, y}};
    }
  }
  return {};
}

// Triple scan for (weakly) 2-absorbing over all elements. Any permutation of a
// violating triple violates too, so scanning x <= y <= z finds the least one.
Verdict scanTwoAbsorbing(const Ideal& p, bool weak) {
  requireProper(p);
  const FiniteRing& r = p.r();
  const auto in = p.mask();
  const auto n = static_cast<Elem>(r.size());
  for (Elem x = 0; x < n; ++x) {
    const auto row_x = r.mulRow(x);
    for (Elem y = x; y < n; ++y) {
      const Elem xy = row_x[y];
      if (in[xy]) continue;
      const auto row_xy = r.mulRow(xy);
      const auto row_y = r.mulRow(y);
      for (Elem z = y; z < n; ++z) {
        const Elem xyz = row_xy[z];
        if (!in[xyz] || (weak && xyz == r.zero())) continue;
        if (in[row_x[z]] || in[row_y[z]]) continue;
        return {false, {x, y, z}};
      }
    }
  }
  return {};
}

// Triple scan for (weakly) 1-absorbing prime over nonunits. Symmetric in x and y
// only, so pairs run over x <= y. Whether a z exists depends on c = xy alone, so
// the least z for each product value is computed once.
Verdict scanOneAbsorbing(const Ideal& p, bool weak) {
  requireProper(p);
  const FiniteRing& r = p.r();
  const auto in = p.mask();
  const auto& nonunits = r.nonunits();
  std::vector<Elem> candidates;  // nonunit z outside P
  for (Elem z : nonunits) {
    if (!in[z]) candidates.push_back(z);
  }
  constexpr std::int64_t kUnknown = -2, kNone = -1;
  std::vector<std::int64_t> least_z(r.size(), kUnknown);
  for (std::size_t i = 0; i < nonunits.size(); ++i) {
    const Elem x = nonunits[i];
    const auto row_x = r.mulRow(x);
    for (std::size_t j = i; j < nonunits.size(); ++j) {
      const Elem y = nonunits[j];
      const Elem c = row_x[y];
      if (in[c] || (weak && c == r.zero())) continue;
      if (least_z[c] == kUnknown) {
        least_z[c] = kNone;
        const auto row_c = r.mulRow(c);
        for (Elem z : candidates) {
          const Elem t = row_c[z];
          if (in[t] && (!weak || t != r.zero())) {
            least_z[c] = z;
            break;
          }
        }
      }
      if (least_z[c] != kNone) return {false, {x, y, static_cast<Elem>(least_z[c])}};
    }
  }
  return {};
}

}  // namespace

Verdict isPrime(const Ideal& p) { return scanPrime(p, false); }
Verdict isWeaklyPrime(const Ideal& p) { return scanPrime(p, true); }
Verdict isOneAbsorbingPrime(const Ideal& p) { return scanOneAbsorbing(p, false); }
Verdict isWeaklyOneAbsorbingPrime(const Ideal& p) { return scanOneAbsorbing(p, true); }
Verdict isTwoAbsorbing(const Ideal& p) { return scanTwoAbsorbing(p, false); }
Verdict isWeaklyTwoAbsorbing(const Ideal& p) { return scanTwoAbsorbing(p, true); }

Verdict decide(Property property, const Ideal& p) {
  switch (property) {
    case Property::Prime: return isPrime(p);
    case Property::WeaklyPrime: return isWeaklyPrime(p);
    case Property::OneAbsorbingPrime: return isOneAbsorbingPrime(p);
    case Property::WeaklyOneAbsorbingPrime: return isWeaklyOneAbsorbingPrime(p);
    case Property::TwoAbsorbing: return isTwoAbsorbing(p);
    case Property::WeaklyTwoAbsorbing: return isWeaklyTwoAbsorbing(p);
  }
  return {};
}

bool witnessViolates(Property property, const Ideal& p, std::span<const Elem> w) {
  const FiniteRing& r = p.r();
  for (Elem e : w) {
    if (e >= r.size()) return false;
  }
  auto in = [&](Elem e) { return p.contains(e); };
  switch (property) {
    case Property::Prime:
    case Property::WeaklyPrime: {
      if (w.size() != 2) return false;
      const Elem xy = r.mul(w[0], w[1]);
      const bool nonzero_ok = property == Property::Prime || xy != r.zero();
      return in(xy) && nonzero_ok && !in(w[0]) && !in(w[1]);
    }
    case Property::OneAbsorbingPrime:
    case Property::WeaklyOneAbsorbingPrime: {
      if (w.size() != 3) return false;
      if (r.isUnit(w[0]) || r.isUnit(w[1]) || r.isUnit(w[2])) return false;
      const Elem xy = r.mul(w[0], w[1]);
      const Elem xyz = r.mul(xy, w[2]);
      const bool nonzero_ok = property == Property::OneAbsorbingPrime || xyz != r.zero();
      return in(xyz) && nonzero_ok && !in(xy) && !in(w[2]);
    }
    case Property::TwoAbsorbing:
    case Property::WeaklyTwoAbsorbing: {
      if (w.size() != 3) return false;
      const Elem xyz = r.mul(r.mul(w[0], w[1]), w[2]);
      const bool nonzero_ok = property == Property::TwoAbsorbing || xyz != r.zero();
      return in(xyz) && nonzero_ok && !in(r.mul(w[0], w[1])) && !in(r.mul(w[0], w[2])) &&
             !in(r.mul(w[1], w[2]));
    }
  }
  return false;
}

std::vector<TripleZero> find1TripleZeros(const Ideal& p) {
  if (!isWeaklyOneAbsorbingPrime(p).holds) {
    throw Error(ErrorKind::NotW1AP, "1-triple zeros are defined for weakly 1-absorbing prime ideals");
  }
  const FiniteRing& r = p.r();
  const auto in = p.mask();
  const auto& nonunits = r.nonunits();
  std::vector<TripleZero> out;
  for (Elem x : nonunits) {
    for (Elem y : nonunits) {
      const Elem xy = r.mul(x, y);
      if (in[xy]) continue;
      const auto row = r.mulRow(xy);
      for (Elem z : nonunits) {
        if (!in[z] && row[z] == r.zero()) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

std::string PropertyReport::code() const {
  std::string out;
  for (Property p : kAllProperties) out += holds(p) ? propertyLetter(p) : '.';
  return out;
}

PropertyReport classify(const Ideal& p) {
  requireProper(p);
  PropertyReport report{p, {}, {}, p.isZero()};
  for (Property prop : kAllProperties) {
    auto verdict = decide(prop, p);
    const auto i = static_cast<std::size_t>(prop);
    report.verdicts[i] = verdict.holds;
    report.witnesses[i] = std::move(verdict.witness);
  }
  return report;
}

bool TmmConditions::allAgree() const {
  return std::all_of(holds.begin(), holds.end(), [&](bool v) { return v == holds[0]; });
}

LatticeTables::LatticeTables(const IdealLattice& lattice) : lattice_(&lattice), width_(lattice.size()) {
  const FiniteRing& r = *lattice.ring();
  scale_.assign(r.size() * width_, 0);
  std::vector<Elem> buf;
  for (Elem x = 0; x < r.size(); ++x) {
    const auto row = r.mulRow(x);
    for (std::size_t i = 0; i < width_; ++i) {
      buf.clear();
      for (Elem a : lattice[i].elements()) buf.push_back(row[a]);
      std::sort(buf.begin(), buf.end());
      buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
      const auto idx = lattice.indexOf(buf);
      if (!idx) throw Error(ErrorKind::InvariantViolation, "x*I is missing from the ideal lattice");
      scale_[x * width_ + i] = *idx;
    }
  }
  product_.assign(width_ * width_, 0);
  for (std::size_t i = 0; i < width_; ++i) {
    for (std::size_t j = i; j < width_; ++j) {
      const auto idx = lattice.indexOf(idealProduct(lattice[i], lattice[j]));
      if (!idx) throw Error(ErrorKind::InvariantViolation, "IJ is missing from the ideal lattice");
      product_[i * width_ + j] = product_[j * width_ + i] = *idx;
    }
  }
}

namespace {

// Distinct values xy over nonunits x, y with xy outside P.
std::vector<Elem> nonunitProductsOutside(const Ideal& p, const std::vector<char>& in) {
  const FiniteRing& r = p.r();
  std::vector<char> seen(r.size(), 0);
  std::vector<Elem> out;
  const auto& nonunits = r.nonunits();
  for (std::size_t i = 0; i < nonunits.size(); ++i) {
    const auto row = r.mulRow(nonunits[i]);
    for (std::size_t j = i; j < nonunits.size(); ++j) {
      const Elem c = row[nonunits[j]];
      if (!in[c] && !seen[c]) {
        seen[c] = 1;
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// (P : c) = P ∪ (0 : c). The right side is always contained in the left.
bool colonIsUnion(const FiniteRing& r, const std::vector<char>& in, Elem c) {
  const auto row = r.mulRow(c);
  for (Elem a = 0; a < r.size(); ++a) {
    if (in[row[a]] && !in[a] && row[a] != r.zero()) return false;
  }
  return true;
}

// (P : c) = P or (P : c) = (0 : c).
bool colonIsOneOf(const FiniteRing& r, const std::vector<char>& in, Elem c) {
  const auto row = r.mulRow(c);
  bool equals_p = true, equals_ann = true;
  for (Elem a = 0; a < r.size(); ++a) {
    const bool in_colon = in[row[a]] != 0;
    if (in_colon != (in[a] != 0)) equals_p = false;
    if (in_colon != (row[a] == r.zero())) equals_ann = false;
  }
  return equals_p || equals_ann;
}

std::size_t latticeIndex(const Ideal& p, const IdealLattice& lattice) {
  if (p.ring() != lattice.ring()) throw Error(ErrorKind::RingMismatch, "ideal and lattice belong to different rings");
  const auto idx = lattice.indexOf(p);
  if (!idx) throw Error(ErrorKind::InvariantViolation, "ideal missing from its ring's lattice");
  return *idx;
}

bool idealTriple(std::size_t pi, const LatticeTables& t) {
  const IdealLattice& lattice = t.lattice();
  const auto proper = lattice.properIndices();
  std::vector<char> seen(lattice.size(), 0);
  std::vector<std::size_t> products;  // IJ not inside P
  for (std::size_t i : proper) {
    for (std::size_t j : proper) {
      const std::size_t m = t.product(i, j);
      if (!seen[m] && !lattice.contains(m, pi)) {
        seen[m] = 1;
        products.push_back(m);
      }
    }
  }
  for (std::size_t m : products) {
    for (std::size_t k : proper) {
      if (lattice.contains(k, pi)) continue;
      const std::size_t q = t.product(m, k);
      if (!lattice[q].isZero() && lattice.contains(q, pi)) return false;
    }
  }
  return true;
}

}  // namespace

bool tmmColonCondition(const Ideal& p) {
  requireProper(p);
  const auto in = p.mask();
  for (Elem c : nonunitProductsOutside(p, in)) {
    if (!colonIsUnion(p.r(), in, c)) return false;
  }
  return true;
}

bool tmmIdealTripleCondition(const Ideal& p, const LatticeTables& tables) {
  requireProper(p);
  return idealTriple(latticeIndex(p, tables.lattice()), tables);
}

bool tmmIdealTripleCondition(const Ideal& p, const IdealLattice& lattice) {
  return tmmIdealTripleCondition(p, LatticeTables(lattice));
}

TmmConditions tmmCharacterize(const Ideal& p, const LatticeTables& tables) {
  requireProper(p);
  const IdealLattice& lattice = tables.lattice();
  const std::size_t pi = latticeIndex(p, lattice);
  const FiniteRing& r = p.r();
  const auto in = p.mask();
  const auto proper = lattice.properIndices();
  const auto products = nonunitProductsOutside(p, in);
  TmmConditions out;
  out.holds[0] = isWeaklyOneAbsorbingPrime(p).holds;
  out.holds[1] = std::all_of(products.begin(), products.end(), [&](Elem c) { return colonIsUnion(r, in, c); });
  out.holds[2] = std::all_of(products.begin(), products.end(), [&](Elem c) { return colonIsOneOf(r, in, c); });

  // (iv): nonunits x, y and proper J with 0 != xyJ ⊆ P; only c = xy matters.
  out.holds[3] = true;
  for (Elem c : products) {
    for (std::size_t j : proper) {
      const std::size_t cj = tables.scale(c, j);
      if (!lattice[cj].isZero() && lattice.contains(cj, pi) && !lattice.contains(j, pi)) {
        out.holds[3] = false;
        break;
      }
    }
    if (!out.holds[3]) break;
  }

  // (v): nonunit x and proper I, J with 0 != xIJ ⊆ P; only xI matters.
  std::vector<char> seen(lattice.size(), 0);
  std::vector<std::size_t> scaled;
  for (Elem x : r.nonunits()) {
    for (std::size_t i : proper) {
      const std::size_t xi = tables.scale(x, i);
      if (!seen[xi] && !lattice.contains(xi, pi)) {
        seen[xi] = 1;
        scaled.push_back(xi);
      }
    }
  }
  out.holds[4] = true;
  for (std::size_t xi : scaled) {
    for (std::size_t j : proper) {
      if (lattice.contains(j, pi)) continue;
      const std::size_t q = tables.product(xi, j);
      if (!lattice[q].isZero() && lattice.contains(q, pi)) {
        out.holds[4] = false;
        break;
      }
    }
    if (!out.holds[4]) break;
  }

  out.holds[5] = idealTriple(pi, tables);
  return out;
}

TmmConditions tmmCharacterize(const Ideal& p, const IdealLattice& lattice) {
  return tmmCharacterize(p, LatticeTables(lattice));
}

AllProperW1ap allProperIdealsW1AP(const IdealLattice& lattice) {
  for (std::size_t i : lattice.properIndices()) {
    auto verdict = isWeaklyOneAbsorbingPrime(lattice[i]);
    if (!verdict.holds) return {false, lattice[i], std::move(verdict.witness)};
  }
  return {};
}

}  // namespace idealis
