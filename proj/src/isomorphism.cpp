#include <vector>

#include "idealis/ring.hpp"

namespace idealis {

namespace {

constexpr std::int64_t kUnassigned = -1;

// Depth-first search over images in index order. Each choice is propagated
// through the addition and multiplication tables, so the first complete
// assignment reached is the lexicographically least isomorphism.
class IsoSearch {
 public:
  IsoSearch(const FiniteRing& a, const FiniteRing& b)
      : a_(a), b_(b), map_(a.size(), kUnassigned), used_(b.size(), 0) {}

  std::optional<std::vector<Elem>> run() {
    if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one())) return std::nullopt;
    if (!search()) return std::nullopt;
    std::vector<Elem> out(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) out[i] = static_cast<Elem>(map_[i]);
    return out;
  }

 private:
  bool search() {
    Elem next = 0;
    while (next < a_.size() && map_[next] != kUnassigned) ++next;
    if (next == a_.size()) return true;
    for (Elem v = 0; v < b_.size(); ++v) {
      if (used_[v]) continue;
      const std::size_t mark = trail_.size();
      if (assign(next, v) && search()) return true;
      undo(mark);
    }
    return false;
  }

  // Records x -> v and everything it forces; false on any conflict (caller undoes).
  bool assign(Elem x, Elem v) {
    std::vector<Elem> queue;
    if (!bind(x, v, queue)) return false;
    while (!queue.empty()) {
      const Elem u = queue.back();
      queue.pop_back();
      const auto mu = static_cast<Elem>(map_[u]);
      for (Elem w = 0; w < a_.size(); ++w) {
        if (map_[w] == kUnassigned) continue;
        const auto mw = static_cast<Elem>(map_[w]);
        if (!bind(a_.add(u, w), b_.add(mu, mw), queue)) return false;
        if (!bind(a_.mul(u, w), b_.mul(mu, mw), queue)) return false;
      }
    }
    return true;
  }

  bool bind(Elem x, Elem v, std::vector<Elem>& queue) {
    if (map_[x] != kUnassigned) return map_[x] == static_cast<std::int64_t>(v);
    if (used_[v] || a_.isUnit(x) != b_.isUnit(v)) return false;
    map_[x] = v;
    used_[v] = 1;
    trail_.push_back(x);
    queue.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Elem x = trail_.back();
      trail_.pop_back();
      used_[static_cast<std::size_t>(map_[x])] = 0;
      map_[x] = kUnassigned;
    }
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  std::vector<std::int64_t> map_;
  std::vector<char> used_;
  std::vector<Elem> trail_;
};

}  // namespace

std::optional<Homomorphism> isomorphismSearch(const RingPtr& a, const RingPtr& b, const Limits& limits) {
  if (a->size() > limits.search_cap || b->size() > limits.search_cap) {
    throw Error(ErrorKind::SearchCapExceeded, "isomorphism search is limited to rings of at most " +
                                                  std::to_string(limits.search_cap) + " elements");
  }
  if (a->size() != b->size() || a->units().size() != b->units().size()) return std::nullopt;
  IsoSearch search(*a, *b);
  auto map = search.run();
  if (!map) return std::nullopt;
  return Homomorphism::make(a, b, std::move(*map));
}

}  // namespace idealis
