#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idealis {

/// Element literal: either a bare integer or a pair of literals, e.g. `(2,(0,1))`.
struct ElemLit {
  std::optional<std::uint64_t> value;
  std::vector<ElemLit> parts;  // exactly two entries when `value` is empty

  static ElemLit scalar(std::uint64_t v) { return ElemLit{v, {}}; }
  static ElemLit pair(ElemLit a, ElemLit b) {
    ElemLit lit;
    lit.parts.push_back(std::move(a));
    lit.parts.push_back(std::move(b));
    return lit;
  }

  bool isScalar() const { return value.has_value(); }
  friend bool operator==(const ElemLit&, const ElemLit&) = default;
};

inline std::string toString(const ElemLit& lit) {
  if (lit.isScalar()) return std::to_string(*lit.value);
  std::string out = "(";
  for (std::size_t i = 0; i < lit.parts.size(); ++i) {
    if (i > 0) out += ",";
    out += toString(lit.parts[i]);
  }
  return out + ")";
}

/// Syntax tree of the ring construction language.
///
/// Children and literals by kind:
///   Zn        n = modulus
///   LocalAlg  n = characteristic p of F_p[x,y]/(x^2,xy,y^2)
///   Product   children = {left, right}
///   Quotient  children = {base}, elems = ideal generators
///   Localize  children = {base}, elems = multiplicative set
///   Idealize  children = {base}, elems = generators of J, module is base/J
struct RingExpr {
  enum class Kind { Zn, Product, Quotient, Localize, Idealize, LocalAlg };

  Kind kind = Kind::Zn;
  std::uint64_t n = 0;
  std::vector<RingExpr> children;
  std::vector<ElemLit> elems;

  static RingExpr zn(std::uint64_t n) { return RingExpr{Kind::Zn, n, {}, {}}; }
  static RingExpr localAlg(std::uint64_t p) { return RingExpr{Kind::LocalAlg, p, {}, {}}; }
  static RingExpr product(RingExpr a, RingExpr b) {
    RingExpr e{Kind::Product, 0, {}, {}};
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
  }
  static RingExpr quotient(RingExpr base, std::vector<ElemLit> gens) {
    return unary(Kind::Quotient, std::move(base), std::move(gens));
  }
  static RingExpr localize(RingExpr base, std::vector<ElemLit> set) {
    return unary(Kind::Localize, std::move(base), std::move(set));
  }
  static RingExpr idealize(RingExpr base, std::vector<ElemLit> gens) {
    return unary(Kind::Idealize, std::move(base), std::move(gens));
  }

  friend bool operator==(const RingExpr&, const RingExpr&) = default;

 private:
  static RingExpr unary(Kind kind, RingExpr base, std::vector<ElemLit> elems) {
    RingExpr e{kind, 0, {}, std::move(elems)};
    e.children.push_back(std::move(base));
    return e;
  }
};

}  // namespace idealis
