#include "idealis/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "idealis/construct.hpp"

namespace idealis {

namespace {

constexpr std::size_t kMaxDepth = 256;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingExpr parseTop() {
    RingExpr e = ring();
    skipWs();
    if (pos_ != text_.size()) fail(afterTerm({"end of input"}), "unexpected " + describeHere());
    return e;
  }

  std::vector<ElemLit> parseListTop() {
    auto lits = idealLit();
    skipWs();
    if (pos_ != text_.size()) fail({"end of input"}, "unexpected " + describeHere());
    return lits;
  }

 private:
  RingExpr ring() {
    Depth guard(*this);
    RingExpr e = term();
    for (;;) {
      skipWs();
      if (!accept('x')) return e;
      e = RingExpr::product(std::move(e), term());
    }
  }

  RingExpr term() {
    RingExpr a = atom();
    last_term_quotient_ = false;
    skipWs();
    if (accept('/')) {
      a = RingExpr::quotient(std::move(a), idealLit());
      last_term_quotient_ = true;
    }
    return a;
  }

  RingExpr atom() {
    skipWs();
    if (acceptWord("LocalAlg")) {
      expect('(', "LocalAlg(");
      const auto p = digits();
      expect(')', ")");
      return RingExpr::localAlg(p);
    }
    if (acceptWord("Loc")) return unary("Loc(", RingExpr::Kind::Localize);
    if (acceptWord("Idealize")) return unary("Idealize(", RingExpr::Kind::Idealize);
    if (accept('Z')) return RingExpr::zn(digits());
    if (accept('(')) {
      RingExpr inner = ring();
      skipWs();
      if (!accept(')')) fail(afterTerm({")"}), "unclosed parenthesis, found " + describeHere());
      last_term_quotient_ = false;
      return inner;
    }
    fail({"Z", "LocalAlg(", "Loc(", "Idealize(", "("}, "expected a ring, found " + describeHere());
  }

  RingExpr unary(const char* opener, RingExpr::Kind kind) {
    expect('(', opener);
    RingExpr base = ring();
    skipWs();
    if (!accept(',')) fail(afterTerm({","}), "expected ',' after the ring, found " + describeHere());
    auto lits = idealLit();
    expect(')', ")");
    return kind == RingExpr::Kind::Localize ? RingExpr::localize(std::move(base), std::move(lits))
                                            : RingExpr::idealize(std::move(base), std::move(lits));
  }

  std::vector<ElemLit> idealLit() {
    std::vector<ElemLit> lits;
    expect('(', "(");
    skipWs();
    if (accept(')')) return lits;
    for (;;) {
      lits.push_back(elem());
      skipWs();
      if (accept(')')) return lits;
      if (!accept(',')) fail({",", ")"}, "expected ',' or ')' in element list, found " + describeHere());
    }
  }

  ElemLit elem() {
    Depth guard(*this);
    skipWs();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return ElemLit::scalar(digits());
    }
    if (!accept('(')) fail({"digits", "("}, "expected an element, found " + describeHere());
    ElemLit a = elem();
    skipWs();
    if (!accept(',')) fail({","}, "a tuple element needs two components, found " + describeHere());
    ElemLit b = elem();
    expect(')', ")");
    return ElemLit::pair(std::move(a), std::move(b));
  }

  std::uint64_t digits() {
    skipWs();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw SyntaxError(start, {}, "number too large");
      }
      value = value * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail({"digits"}, "expected a number, found " + describeHere());
    return value;
  }

  // Tokens that may legally follow a finished term, plus `extra`.
  std::vector<std::string> afterTerm(std::vector<std::string> extra) const {
    std::vector<std::string> out{"x"};
    if (!last_term_quotient_) out.push_back("/");
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  }

  void skipWs() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipWs();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool acceptWord(std::string_view word) {
    skipWs();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c, const char* token) {
    if (!accept(c)) fail({token}, std::string("expected '") + c + "', found " + describeHere());
  }

  std::string describeHere() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
    throw SyntaxError(pos_, std::move(expected), detail);
  }

  struct Depth {
    explicit Depth(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) parser.fail({}, "nesting too deep");
    }
    ~Depth() { --parser.depth_; }
    Parser& parser;
  };

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  bool last_term_quotient_ = false;
};

}  // namespace

RingExpr parseRing(std::string_view text) { return Parser(text).parseTop(); }

std::vector<ElemLit> parseElemList(std::string_view text) { return Parser(text).parseListTop(); }

std::string printElemList(const std::vector<ElemLit>& elems) {
  std::string out = "(";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ",";
    out += toString(elems[i]);
  }
  return out + ")";
}

std::string printExpr(const RingExpr& e) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::Zn: return "Z" + std::to_string(e.n);
    case K::LocalAlg: return "LocalAlg(" + std::to_string(e.n) + ")";
    case K::Localize: return "Loc(" + printExpr(e.children[0]) + ", " + printElemList(e.elems) + ")";
    case K::Idealize: return "Idealize(" + printExpr(e.children[0]) + ", " + printElemList(e.elems) + ")";
    case K::Product: {
      const RingExpr& right = e.children[1];
      std::string r = printExpr(right);
      if (right.kind == K::Product) r = "(" + r + ")";
      return printExpr(e.children[0]) + " x " + r;
    }
    case K::Quotient: {
      const RingExpr& base = e.children[0];
      std::string b = printExpr(base);
      if (base.kind == K::Product || base.kind == K::Quotient) b = "(" + b + ")";
      return b + "/" + printElemList(e.elems);
    }
  }
  return "?";
}

Elem resolveElement(const FiniteRing& ring, const ElemLit& lit) {
  using K = RingExpr::Kind;
  const auto& parts = ring.structure().parts;
  const K kind = ring.provenance().kind;
  if ((kind == K::Quotient || kind == K::Localize) && parts.size() == 1) {
    return ring.structure().lift[resolveElement(*parts[0], lit)];
  }
  if (lit.isScalar()) {
    if (*lit.value >= ring.size()) {
      throw Error(ErrorKind::ElementOutOfRange, "element " + std::to_string(*lit.value) + " is out of range for a ring of " +
                                                    std::to_string(ring.size()) + " elements");
    }
    return static_cast<Elem>(*lit.value);
  }
  if ((kind == K::Product || kind == K::Idealize) && parts.size() == 2) {
    const Elem a = resolveElement(*parts[0], lit.parts[0]);
    const Elem b = resolveElement(*parts[1], lit.parts[1]);
    return static_cast<Elem>(a * parts[1]->size() + b);
  }
  throw Error(ErrorKind::ElementOutOfRange, "tuple " + toString(lit) + " given for a ring without components");
}

std::vector<Elem> resolveElements(const FiniteRing& ring, const std::vector<ElemLit>& lits) {
  std::vector<Elem> out;
  out.reserve(lits.size());
  for (const auto& lit : lits) out.push_back(resolveElement(ring, lit));
  return out;
}

RingPtr elaborate(const RingExpr& e, const Limits& limits) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::Zn: return makeZn(e.n, limits);
    case K::LocalAlg: return makeLocalAlgebra(e.n, limits);
    case K::Product: return makeProduct(elaborate(e.children[0], limits), elaborate(e.children[1], limits), limits);
    case K::Quotient: {
      auto base = elaborate(e.children[0], limits);
      const auto gens = resolveElements(*base, e.elems);
      return makeQuotient(base, idealGen(base, gens)).ring;
    }
    case K::Localize: {
      auto base = elaborate(e.children[0], limits);
      auto set = resolveElements(*base, e.elems);
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      return makeLocalization(base, set, limits).ring;
    }
    case K::Idealize: {
      auto base = elaborate(e.children[0], limits);
      const auto gens = resolveElements(*base, e.elems);
      return makeIdealization(base, idealGen(base, gens), limits);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown ring expression");
}

RingPtr parseAndBuild(std::string_view text, const Limits& limits) { return elaborate(parseRing(text), limits); }

Ideal parseIdeal(std::string_view text, const RingPtr& ring) {
  const auto gens = resolveElements(*ring, parseElemList(text));
  return idealGen(ring, gens);
}

}  // namespace idealis
