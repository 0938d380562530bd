#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idealis/expr.hpp"
#include "idealis/ideal.hpp"
#include "idealis/ring.hpp"

namespace idealis {

// Ring expressions:
//   ring    := term { "x" term }
//   term    := atom [ "/" idealLit ]
//   atom    := "Z" digits | "LocalAlg(" digits ")" | "Loc(" ring "," idealLit ")"
//            | "Idealize(" ring "," idealLit ")" | "(" ring ")"
//   idealLit:= "(" [ elem { "," elem } ] ")"
//   elem    := digits | "(" elem "," elem ")"
// Whitespace may appear between any two tokens. Products associate to the left.

/// Throws SyntaxError with the byte offset and the accepted tokens.
RingExpr parseRing(std::string_view text);
/// Parses an idealLit such as "(4)" or "((2,0),(0,3))".
std::vector<ElemLit> parseElemList(std::string_view text);

/// Canonical text; parseRing(printExpr(e)) == e.
std::string printExpr(const RingExpr& expr);
std::string printElemList(const std::vector<ElemLit>& elems);

/// Builds the ring an expression describes. Caps come from `limits`.
RingPtr elaborate(const RingExpr& expr, const Limits& limits = {});
RingPtr parseAndBuild(std::string_view text, const Limits& limits = {});

/// Maps a literal to an element index of `ring`.
///
/// Quotients and localizations resolve the literal in their base ring and map it
/// across. Elsewhere a bare integer is a raw element index, and a pair (a, b) is
/// read per component in products and idealizations.
Elem resolveElement(const FiniteRing& ring, const ElemLit& lit);
std::vector<Elem> resolveElements(const FiniteRing& ring, const std::vector<ElemLit>& lits);

/// Ideal generated by the literals in `text`.
Ideal parseIdeal(std::string_view text, const RingPtr& ring);

}  // namespace idealis
