#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "idealis/classify.hpp"
#include "idealis/expr.hpp"

namespace idealis {

/// Boolean combination of the six predicates, e.g. "w1ap AND NOT (weaklyPrime OR prime)".
/// AND binds tighter than OR; keywords are case-insensitive.
class PropertyExpr {
 public:
  /// Throws SyntaxError with the offset of the offending token.
  static PropertyExpr parse(std::string_view text);

  /// `decide` is called at most once per property that the expression mentions.
  bool eval(const std::function<bool(Property)>& decide) const;
  bool eval(const PropertyReport& report) const;
  /// Fully parenthesized canonical form.
  std::string print() const;
  std::vector<Property> mentioned() const;

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
};

/// Rings scanned by `search`, in increasing size: Z_n, then Z_a x Z_b (a <= b), then
/// Z_a x Z_b x Z_c (a <= b <= c), then LocalAlg(p); ties broken by the factor sizes.
std::vector<RingExpr> searchUniverse(std::size_t max_size);

struct SearchHit {
  std::string ring;
  std::string ideal;
  std::string code;
};

/// Streams every proper ideal of the universe that satisfies `property`, ring by ring,
/// ideals in lattice order. Returns the number of hits.
std::size_t search(const PropertyExpr& property, std::size_t max_size, const Limits& limits,
                   const std::function<void(const SearchHit&)>& emit);

}  // namespace idealis
