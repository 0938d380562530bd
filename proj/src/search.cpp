#include "idealis/search.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <tuple>

#include "idealis/dsl.hpp"

namespace idealis {

struct PropertyExpr::Node {
  enum class Kind { Leaf, Not, And, Or } kind = Kind::Leaf;
  Property property = Property::Prime;
  std::shared_ptr<const Node> left, right;
};

namespace {

using Node = PropertyExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  NodePtr top() {
    NodePtr e = disjunction();
    skipWs();
    if (pos_ != text_.size()) throw SyntaxError(pos_, {"AND", "OR", "end of input"}, "unexpected '" + word() + "'");
    return e;
  }

 private:
  NodePtr disjunction() {
    NodePtr e = conjunction();
    while (keyword("OR")) e = binary(Node::Kind::Or, e, conjunction());
    return e;
  }

  NodePtr conjunction() {
    NodePtr e = negation();
    while (keyword("AND")) e = binary(Node::Kind::And, e, negation());
    return e;
  }

  NodePtr negation() {
    if (++depth_ > 256) throw SyntaxError(pos_, {}, "nesting too deep");
    NodePtr e;
    if (keyword("NOT")) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Not;
      n->left = negation();
      e = n;
    } else {
      e = primary();
    }
    --depth_;
    return e;
  }

  NodePtr primary() {
    skipWs();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      NodePtr e = disjunction();
      skipWs();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw SyntaxError(pos_, {")", "AND", "OR"}, "unclosed parenthesis");
      }
      ++pos_;
      return e;
    }
    const std::size_t start = pos_;
    const std::string name = word();
    if (name.empty()) throw SyntaxError(start, {"property name", "NOT", "("}, "expected a property");
    const auto p = propertyFromName(name);
    if (!p) {
      std::vector<std::string> names;
      for (Property q : kAllProperties) names.emplace_back(propertyName(q));
      throw SyntaxError(start, std::move(names), "unknown property '" + name + "'");
    }
    pos_ += name.size();
    auto n = std::make_shared<Node>();
    n->property = *p;
    return n;
  }

  static NodePtr binary(Node::Kind kind, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->left = std::move(a);
    n->right = std::move(b);
    return n;
  }

  bool keyword(std::string_view kw) {
    skipWs();
    const std::string w = word();
    if (w.size() != kw.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(w[i])) != kw[i]) return false;
    }
    pos_ += w.size();
    return true;
  }

  // The identifier at the cursor, without consuming it.
  std::string word() {
    skipWs();
    std::size_t end = pos_;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_ && pos_ < text_.size()) return std::string(1, text_[pos_]);
    return std::string(text_.substr(pos_, end - pos_));
  }

  void skipWs() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

bool evalNode(const Node& n, const std::function<bool(Property)>& decide) {
  switch (n.kind) {
    case Node::Kind::Leaf: return decide(n.property);
    case Node::Kind::Not: return !evalNode(*n.left, decide);
    case Node::Kind::And: return evalNode(*n.left, decide) && evalNode(*n.right, decide);
    case Node::Kind::Or: return evalNode(*n.left, decide) || evalNode(*n.right, decide);
  }
  return false;
}

std::string printNode(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Leaf: return propertyName(n.property);
    case Node::Kind::Not: return "NOT " + printNode(*n.left);
    case Node::Kind::And: return "(" + printNode(*n.left) + " AND " + printNode(*n.right) + ")";
    case Node::Kind::Or: return "(" + printNode(*n.left) + " OR " + printNode(*n.right) + ")";
  }
  return "?";
}

void collect(const Node& n, std::vector<Property>& out) {
  if (n.kind == Node::Kind::Leaf) {
    if (std::find(out.begin(), out.end(), n.property) == out.end()) out.push_back(n.property);
    return;
  }
  collect(*n.left, out);
  if (n.right) collect(*n.right, out);
}

}  // namespace

PropertyExpr PropertyExpr::parse(std::string_view text) {
  PropertyExpr e;
  e.root_ = ExprParser(text).top();
  return e;
}

bool PropertyExpr::eval(const std::function<bool(Property)>& decide) const {
  std::array<std::optional<bool>, 6> memo;
  return evalNode(*root_, [&](Property p) {
    auto& slot = memo[static_cast<std::size_t>(p)];
    if (!slot) slot = decide(p);
    return *slot;
  });
}

bool PropertyExpr::eval(const PropertyReport& report) const {
  return eval([&](Property p) { return report.holds(p); });
}

std::string PropertyExpr::print() const { return printNode(*root_); }

std::vector<Property> PropertyExpr::mentioned() const {
  std::vector<Property> out;
  collect(*root_, out);
  return out;
}

std::vector<RingExpr> searchUniverse(std::size_t max_size) {
  // (size, family, factors) sorts the universe.
  std::vector<std::tuple<std::size_t, int, std::vector<std::size_t>>> keys;
  for (std::size_t n = 2; n <= max_size; ++n) keys.push_back({n, 0, {n}});
  for (std::size_t a = 2; a * a <= max_size; ++a) {
    for (std::size_t b = a; a * b <= max_size; ++b) {
      keys.push_back({a * b, 1, {a, b}});
      for (std::size_t c = b; a * b * c <= max_size; ++c) keys.push_back({a * b * c, 2, {a, b, c}});
    }
  }
  for (std::size_t p = 2; p * p * p <= max_size; ++p) {
    if (isPrimeNumber(p)) keys.push_back({p * p * p, 3, {p}});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<RingExpr> out;
  for (const auto& [size, family, f] : keys) {
    switch (family) {
      case 0: out.push_back(RingExpr::zn(f[0])); break;
      case 1: out.push_back(RingExpr::product(RingExpr::zn(f[0]), RingExpr::zn(f[1]))); break;
      case 2:
        out.push_back(RingExpr::product(RingExpr::product(RingExpr::zn(f[0]), RingExpr::zn(f[1])), RingExpr::zn(f[2])));
        break;
      default: out.push_back(RingExpr::localAlg(f[0])); break;
    }
  }
  return out;
}

std::size_t search(const PropertyExpr& property, std::size_t max_size, const Limits& limits,
                   const std::function<void(const SearchHit&)>& emit) {
  std::size_t hits = 0;
  for (const auto& expr : searchUniverse(max_size)) {
    const RingPtr ring = elaborate(expr, limits);
    const IdealLattice lattice = allIdeals(ring, limits);
    const std::string text = printExpr(expr);
    for (std::size_t i : lattice.properIndices()) {
      const Ideal& ideal = lattice[i];
      if (!property.eval([&](Property p) { return decide(p, ideal).holds; })) continue;
      ++hits;
      emit({text, ideal.literal(), classify(ideal).code()});
    }
  }
  return hits;
}

}  // namespace idealis
