#include "idealis/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "idealis/dsl.hpp"

namespace idealis {

bool CorpusRing::allProperW1ap() const {
  for (const auto& r : reports) {
    if (!r.holds(Property::WeaklyOneAbsorbingPrime)) return false;
  }
  return true;
}

const PropertyReport* CorpusRing::report(std::size_t i) const {
  return i < reports.size() ? &reports[i] : nullptr;
}

const LatticeTables& CorpusRing::tables() const {
  if (!tables_) tables_ = std::make_shared<const LatticeTables>(*lattice);
  return *tables_;
}

namespace {

CorpusRing fill(CorpusRing out, const Limits& limits) {
  out.lattice = std::make_shared<const IdealLattice>(allIdeals(out.ring, limits));
  // Ideals are sorted by size, so the whole ring is last and every other index is proper.
  for (std::size_t i = 0; i + 1 < out.lattice->size(); ++i) out.reports.push_back(classify((*out.lattice)[i]));
  return out;
}

}  // namespace

CorpusRing buildCorpusRing(RingExpr expr, const Limits& limits) {
  CorpusRing out;
  out.ring = elaborate(expr, limits);
  out.text = printExpr(expr);
  out.expr = std::move(expr);
  return fill(std::move(out), limits);
}

CorpusRing buildCorpusRing(RingPtr ring, const Limits& limits) {
  CorpusRing out;
  out.expr = ring->provenance();
  out.text = printExpr(out.expr);
  out.ring = std::move(ring);
  return fill(std::move(out), limits);
}

Corpus Corpus::fromExpressions(std::string name, const std::vector<RingExpr>& exprs, const Limits& limits) {
  Corpus c;
  c.name_ = std::move(name);
  c.rings_.reserve(exprs.size());
  for (const auto& e : exprs) c.rings_.push_back(buildCorpusRing(e, limits));
  return c;
}

Corpus Corpus::fromText(std::string name, std::string_view text, const Limits& limits) {
  std::vector<RingExpr> exprs;
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start <= text.size()) {
    ++line_no;
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        exprs.push_back(parseRing(line));
      } catch (const SyntaxError& e) {
        throw SyntaxError(line_start + e.offset(), e.expected(),
                          "line " + std::to_string(line_no) + ", column " + std::to_string(e.offset() + 1) +
                              ": " + e.detail());
      }
    }
    line_start = line_end + 1;
  }
  return fromExpressions(std::move(name), exprs, limits);
}

Corpus Corpus::fromFile(const std::string& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read corpus file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fromText(path, buf.str(), limits);
}

Corpus Corpus::defaultCorpus(const Limits& limits) {
  return fromExpressions(kDefaultCorpusVersion, defaultCorpusExpressions(), limits);
}

std::vector<RingExpr> defaultCorpusExpressions() {
  std::vector<RingExpr> out;
  for (std::uint64_t n = 2; n <= 100; ++n) out.push_back(RingExpr::zn(n));
  for (std::uint64_t a = 2; a * a <= 100; ++a) {
    for (std::uint64_t b = a; a * b <= 100; ++b) out.push_back(RingExpr::product(RingExpr::zn(a), RingExpr::zn(b)));
  }
  out.push_back(RingExpr::localAlg(2));
  out.push_back(RingExpr::localAlg(3));
  for (std::uint64_t n = 2; n <= 8; ++n) {
    // Ideals of Z_n are (d) for the divisors d of n; d = n gives (0).
    for (std::uint64_t d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      out.push_back(RingExpr::idealize(RingExpr::zn(n), {ElemLit::scalar(d % n)}));
    }
  }
  return out;
}

std::string Corpus::hash() const {
  std::string all;
  for (const auto& r : rings_) {
    all += r.text;
    all += '\n';
  }
  return fnv1aHex(all);
}

void injectTableFault(Corpus& corpus, const RingExpr& expr, const RingPtr& donor, const Limits& limits) {
  const std::string text = printExpr(expr);
  auto& rings = corpus.mutableRings();
  auto it = std::find_if(rings.begin(), rings.end(), [&](const CorpusRing& r) { return r.text == text; });
  if (it == rings.end()) {
    rings.push_back(buildCorpusRing(expr, limits));
    it = rings.end() - 1;
  }
  const RingPtr& victim = it->ring;
  const std::size_t n = victim->size();
  if (donor->size() != n) throw Error(ErrorKind::InvalidArgument, "fault donor must have the same size");
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = donor->add(a, b);
      mul[a * n + b] = donor->mul(a, b);
    }
  }
  auto broken = FiniteRing::uncheckedForTesting(n, std::move(add), std::move(mul), donor->zero(), donor->one(),
                                                victim->provenance(), victim->structure());
  *it = buildCorpusRing(std::move(broken), limits);
}

std::string fnv1aHex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace idealis
