#include "idealis/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace idealis {

Limits Limits::fromEnvironment() {
  Limits limits;
  if (const char* env = std::getenv("IDEALIS_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) limits.element_cap = static_cast<std::size_t>(cap);
  }
  return limits;
}

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

[[noreturn]] void axiomFailure(const std::string& what) {
  throw Error(ErrorKind::InvariantViolation, "ring axiom fails: " + what);
}

// Greedy generating set of the additive magma: walk elements by index and keep
// any element not yet reachable as a sum of earlier generators.
std::vector<Elem> greedyAdditiveGenerators(std::size_t n, const std::vector<Elem>& add) {
  std::vector<Elem> gens;
  std::vector<char> in_span(n, 0);
  std::vector<Elem> span;
  for (Elem e = 0; e < n; ++e) {
    if (in_span[e]) continue;
    gens.push_back(e);
    std::vector<Elem> work{e};
    in_span[e] = 1;
    span.push_back(e);
    while (!work.empty()) {
      const Elem u = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < span.size(); ++i) {
        const Elem v = span[i];
        for (Elem s : {add[u * n + v], add[v * n + u]}) {
          if (!in_span[s]) {
            in_span[s] = 1;
            span.push_back(s);
            work.push_back(s);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

RingPtr FiniteRing::create(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                           RingExpr provenance, RingStructure structure) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "a ring with 1 != 0 needs at least two elements");
  if (add.size() != n * n || mul.size() != n * n) {
    throw Error(ErrorKind::InvalidArgument, "operation tables must be n x n");
  }
  auto ring = uncheckedForTesting(n, std::move(add), std::move(mul), zero, one, std::move(provenance),
                                  std::move(structure));
  ring->verifyAxioms();
  return ring;
}

RingPtr FiniteRing::uncheckedForTesting(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                                        Elem one, RingExpr provenance, RingStructure structure) {
  std::shared_ptr<FiniteRing> ring(new FiniteRing());
  ring->n_ = n;
  ring->add_ = std::move(add);
  ring->mul_ = std::move(mul);
  ring->zero_ = zero;
  ring->one_ = one;
  ring->provenance_ = std::move(provenance);
  ring->structure_ = std::move(structure);
  for (Elem v : ring->add_) {
    if (v >= n) throw Error(ErrorKind::InvariantViolation, "addition table entry out of range");
  }
  for (Elem v : ring->mul_) {
    if (v >= n) throw Error(ErrorKind::InvariantViolation, "multiplication table entry out of range");
  }
  if (zero >= n || one >= n) throw Error(ErrorKind::InvariantViolation, "identity out of range");
  ring->finish();
  return ring;
}

void FiniteRing::finish() {
  additive_gens_ = greedyAdditiveGenerators(n_, add_);
  neg_.assign(n_, zero_);
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }
    }
  }
  is_unit_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    const auto row = mulRow(a);
    if (std::find(row.begin(), row.end(), one_) != row.end()) is_unit_[a] = 1;
  }
  units_.clear();
  nonunits_.clear();
  for (Elem a = 0; a < n_; ++a) (is_unit_[a] ? units_ : nonunits_).push_back(a);
}

// The associativity and distributivity checks run over the additive generators G
// instead of all of A. Light's test: if (x+g)+y = x+(g+y) for every g in a
// generating set, + is associative. Once + is a group, x(y+g) = xy+xg for all g in G
// makes multiplication by x additive, so (xy)z - x(yz) is additive in each slot and
// vanishes everywhere iff it vanishes on G^3.
void FiniteRing::verifyAxioms() const {
  const auto& gens = additive_gens_;
  if (zero_ == one_) axiomFailure("1 = 0");
  for (Elem a = 0; a < n_; ++a) {
    if (add(zero_, a) != a) axiomFailure("0 + " + std::to_string(a) + " != " + std::to_string(a));
    if (mul(one_, a) != a) axiomFailure("1 * " + std::to_string(a) + " != " + std::to_string(a));
    if (add(a, neg_[a]) != zero_) axiomFailure("no additive inverse for " + std::to_string(a));
    for (Elem b = a + 1; b < n_; ++b) {
      if (add(a, b) != add(b, a)) axiomFailure("addition not commutative at " + triple(a, b, 0));
      if (mul(a, b) != mul(b, a)) axiomFailure("multiplication not commutative at " + triple(a, b, 0));
    }
  }
  for (Elem g : gens) {
    for (Elem x = 0; x < n_; ++x) {
      const Elem xg = add(x, g);
      for (Elem y = 0; y < n_; ++y) {
        if (add(xg, y) != add(x, add(g, y))) axiomFailure("addition not associative at " + triple(x, g, y));
      }
    }
  }
  for (Elem g : gens) {
    for (Elem x = 0; x < n_; ++x) {
      const Elem xg = mul(x, g);
      for (Elem y = 0; y < n_; ++y) {
        if (mul(x, add(y, g)) != add(mul(x, y), xg)) {
          axiomFailure("multiplication does not distribute at " + triple(x, y, g));
        }
      }
    }
  }
  for (Elem a : gens) {
    for (Elem b : gens) {
      for (Elem c : gens) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          axiomFailure("multiplication not associative at " + triple(a, b, c));
        }
      }
    }
  }
}

Elem FiniteRing::pow(Elem a, std::size_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::vector<Elem> FiniteRing::regularElements() const {
  std::vector<Elem> regular;
  for (Elem a = 0; a < n_; ++a) {
    bool zero_divisor = false;
    for (Elem b = 0; b < n_ && !zero_divisor; ++b) {
      zero_divisor = b != zero_ && mul(a, b) == zero_;
    }
    if (!zero_divisor) regular.push_back(a);
  }
  return regular;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  const auto row = mulRow(a);
  const auto it = std::find(row.begin(), row.end(), one_);
  if (it == row.end()) return std::nullopt;
  return static_cast<Elem>(it - row.begin());
}

std::string FiniteRing::elementName(Elem a) const { return formatElement(a, false); }
std::string FiniteRing::elementLiteral(Elem a) const { return toString(toLiteral(a)); }

ElemLit FiniteRing::toLiteral(Elem a) const {
  const auto& parts = structure_.parts;
  switch (provenance_.kind) {
    case RingExpr::Kind::Zn:
    case RingExpr::Kind::LocalAlg:
      break;
    case RingExpr::Kind::Product:
      if (parts.size() == 2) {
        const auto right = static_cast<Elem>(parts[1]->size());
        return ElemLit::pair(parts[0]->toLiteral(a / right), parts[1]->toLiteral(a % right));
      }
      break;
    case RingExpr::Kind::Quotient:
    case RingExpr::Kind::Localize:
      if (parts.size() == 1 && a < structure_.rep.size()) return parts[0]->toLiteral(structure_.rep[a]);
      break;
    case RingExpr::Kind::Idealize:
      if (parts.size() == 2) {
        const auto m = static_cast<Elem>(parts[1]->size());
        return ElemLit::pair(parts[0]->toLiteral(a / m), parts[1]->toLiteral(a % m));
      }
      break;
  }
  return ElemLit::scalar(a);
}

std::string FiniteRing::formatElement(Elem a, bool literal) const {
  if (literal) return elementLiteral(a);
  const auto& parts = structure_.parts;
  switch (provenance_.kind) {
    case RingExpr::Kind::Zn:
      break;
    case RingExpr::Kind::LocalAlg: {
      const auto p = static_cast<Elem>(provenance_.n);
      const Elem c0 = a % p, c1 = (a / p) % p, c2 = a / (p * p);
      std::string out;
      auto term = [&](Elem coeff, const char* var) {
        if (coeff == 0) return;
        if (!out.empty()) out += "+";
        if (coeff != 1 || *var == '\0') out += std::to_string(coeff);
        out += var;
      };
      term(c0, "");
      term(c1, "x");
      term(c2, "y");
      return out.empty() ? "0" : out;
    }
    case RingExpr::Kind::Product:
      if (parts.size() == 2) {
        const auto right = static_cast<Elem>(parts[1]->size());
        return "(" + parts[0]->elementName(a / right) + "," + parts[1]->elementName(a % right) + ")";
      }
      break;
    case RingExpr::Kind::Quotient:
    case RingExpr::Kind::Localize:
      if (parts.size() == 1 && a < structure_.rep.size()) return parts[0]->elementName(structure_.rep[a]);
      break;
    case RingExpr::Kind::Idealize:
      if (parts.size() == 2) {
        const auto m = static_cast<Elem>(parts[1]->size());
        return "(" + parts[0]->elementName(a / m) + "," + parts[1]->elementName(a % m) + ")";
      }
      break;
  }
  return std::to_string(a);
}

Homomorphism Homomorphism::make(RingPtr source, RingPtr target, std::vector<Elem> map) {
  const FiniteRing& s = *source;
  const FiniteRing& t = *target;
  if (map.size() != s.size()) throw Error(ErrorKind::InvalidArgument, "map length differs from source size");
  for (Elem v : map) {
    if (v >= t.size()) throw Error(ErrorKind::InvalidArgument, "map image out of range");
  }
  if (map[s.one()] != t.one()) throw Error(ErrorKind::InvariantViolation, "homomorphism does not send 1 to 1");
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = a; b < s.size(); ++b) {
      if (map[s.add(a, b)] != t.add(map[a], map[b]) || map[s.mul(a, b)] != t.mul(map[a], map[b])) {
        throw Error(ErrorKind::InvariantViolation,
                    "map does not respect the operations at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
  return Homomorphism(std::move(source), std::move(target), std::move(map));
}

std::vector<Elem> Homomorphism::kernel() const {
  std::vector<Elem> k;
  for (Elem a = 0; a < map_.size(); ++a) {
    if (map_[a] == target_->zero()) k.push_back(a);
  }
  return k;
}

std::vector<Elem> Homomorphism::image() const {
  std::vector<Elem> img(map_.begin(), map_.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

bool Homomorphism::isInjective() const { return image().size() == map_.size(); }
bool Homomorphism::isSurjective() const { return image().size() == target_->size(); }

bool Homomorphism::preservesNonunits() const {
  for (Elem a : source_->nonunits()) {
    if (target_->isUnit(map_[a])) return false;
  }
  return true;
}

bool isPrimeNumber(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace idealis
