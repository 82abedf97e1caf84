#include "treedepth/separators.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace treedepth {

bool SeparatorFamily::insert(const VertexSet& s) {
  if (!index_.insert(s).second) return false;
  members_.push_back(s);
  return true;
}

void SeparatorFamily::sort() { std::sort(members_.begin(), members_.end(), size_lex_less); }

SeparatorFamily SeparatorFamily::truncated(int k) const {
  SeparatorFamily out(host_, k);
  for (const auto& s : members_)
    if (s.count() <= k) out.insert(s);
  return out;
}

bool is_minimal_separator(const Graph& g, const VertexSet& host, const VertexSet& s) {
  if (!s.subset_of(host)) return false;
  int full = 0;
  for (const auto& c : components(g, host - s, host))
    if (c.boundary == s && ++full >= 2) return true;
  return false;
}

namespace {

enum class OnBudget { Stop, Throw };

/// Berry-style generation closure. `accept` decides membership of a
/// candidate; candidates larger than `prune_above` (when >= 0) are discarded
/// before any further work.
template <typename Accept>
void berry_closure(const Graph& g, const VertexSet& host, std::vector<VertexSet> seeds, int prune_above,
                   Accept&& accept, const EnumerationLimits& limits, OnBudget on_budget, SeparatorFamily& family) {
  std::unordered_set<VertexSet, VertexSetHash> rejected;
  std::deque<std::size_t> queue;

  auto offer = [&](const VertexSet& cand) -> bool {
    if (prune_above >= 0 && cand.count() > prune_above) return true;
    if (family.contains(cand) || rejected.contains(cand)) return true;
    if (!accept(cand)) {
      rejected.insert(cand);
      return true;
    }
    if (family.size() >= limits.max_family) {
      if (on_budget == OnBudget::Throw)
        throw BudgetExceeded("minimal separator family exceeded " + std::to_string(limits.max_family));
      return false;
    }
    family.insert(cand);
    queue.push_back(family.size() - 1);
    return true;
  };

  std::sort(seeds.begin(), seeds.end(), size_lex_less);
  for (const auto& s : seeds)
    if (!offer(s)) return;

  while (!queue.empty()) {
    const VertexSet current = family.separators()[queue.front()];
    queue.pop_front();
    for (int v : current) {
      VertexSet rest = host - current;
      rest -= g.neighbors(v);
      for (const auto& c : components(g, rest, host))
        if (!offer(c.boundary)) return;
    }
  }
}

std::vector<VertexSet> close_candidates(const Graph& g, const VertexSet& host, int a) {
  std::vector<VertexSet> out;
  VertexSet rest = host - closed_neighborhood(g, a);
  for (auto& c : components(g, rest, host)) out.push_back(std::move(c.boundary));
  return out;
}

std::vector<VertexSet> all_close_candidates(const Graph& g, const VertexSet& host) {
  std::vector<VertexSet> out;
  for (int a : host) {
    auto part = close_candidates(g, host, a);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace

SeparatorFamily close_separators(const Graph& g, const VertexSet& host, int a) {
  SeparatorFamily out(host, host.count());
  auto cands = close_candidates(g, host, a);
  std::sort(cands.begin(), cands.end(), size_lex_less);
  for (const auto& s : cands)
    if (!out.contains(s) && is_minimal_separator(g, host, s)) out.insert(s);
  return out;
}

SeparatorFamily enumerate_heuristic(const Graph& g, const VertexSet& host, int k, const EnumerationLimits& limits) {
  SeparatorFamily out(host, k);
  if (k < 0) return out;
  auto accept = [&](const VertexSet& s) { return is_minimal_separator(g, host, s); };
  berry_closure(g, host, all_close_candidates(g, host), k, accept, limits, OnBudget::Stop, out);
  out.sort();
  return out;
}

SeparatorFamily enumerate_all(const Graph& g, const VertexSet& host, const EnumerationLimits& limits) {
  SeparatorFamily out(host, host.count());
  auto accept = [&](const VertexSet& s) { return is_minimal_separator(g, host, s); };
  berry_closure(g, host, all_close_candidates(g, host), -1, accept, limits, OnBudget::Throw, out);
  out.sort();
  return out;
}

namespace {

/// Grows a connected side A from its smallest vertex `anchor`; each boundary
/// vertex is either absorbed into A or fixed into the separator F.
class SideBrancher {
 public:
  SideBrancher(const Graph& g, const VertexSet& host, int k, const EnumerationLimits& limits, SeparatorFamily& out)
      : g_(g), host_(host), k_(k), limits_(limits), out_(out) {}

  void run(int anchor) {
    below_ = VertexSet(g_.n());
    for (int v : host_) {
      if (v >= anchor) break;
      below_.set(v);
    }
    grow(VertexSet::single(g_.n(), anchor), VertexSet(g_.n()));
  }

 private:
  void grow(const VertexSet& side, VertexSet fixed) {
    if (++nodes_ > limits_.max_family * kNodesPerMember)
      throw BudgetExceeded("exact separator enumeration exceeded its node budget");
    const VertexSet boundary = neighborhood_set(g_, side) & host_;
    VertexSet open = boundary - fixed;
    fixed |= open & below_;
    open -= below_;
    if (fixed.count() > k_) return;
    // a separator vertex needs a neighbour on the far side
    const VertexSet near = side | boundary;
    for (int v : fixed)
      if (((g_.neighbors(v) & host_) - near).empty()) return;
    if (open.empty()) {
      accept(side, fixed);
      return;
    }
    if (fixed.count() == k_) {
      VertexSet closure = component_of(g_, host_ - fixed, side.first());
      if (closure.intersects(below_)) return;
      if ((neighborhood_set(g_, closure) & host_) == fixed) accept(closure, fixed);
      return;
    }
    int pick = -1;
    int best = -1;
    for (int v : open) {
      int inside = g_.neighbors(v).intersection_count(side);
      if (inside > best) {
        best = inside;
        pick = v;
      }
    }
    VertexSet wider = side;
    wider.set(pick);
    grow(wider, fixed);
    fixed.set(pick);
    grow(side, std::move(fixed));
  }

  void accept(const VertexSet& side, const VertexSet& s) {
    if (out_.contains(s)) return;
    for (const auto& c : components(g_, host_ - s - side, host_))
      if (c.boundary == s) {
        out_.insert(s);
        if (out_.size() > limits_.max_family) throw BudgetExceeded("separator family exceeded its budget");
        return;
      }
  }

  static constexpr std::size_t kNodesPerMember = 64;

  const Graph& g_;
  const VertexSet& host_;
  int k_;
  const EnumerationLimits& limits_;
  SeparatorFamily& out_;
  VertexSet below_;
  std::size_t nodes_ = 0;
};

}  // namespace

SeparatorFamily enumerate_exact(const Graph& g, const VertexSet& host, int k, const EnumerationLimits& limits) {
  SeparatorFamily out(host, k);
  if (k < 0) return out;
  SideBrancher brancher(g, host, k, limits, out);
  for (int a : host) brancher.run(a);
  out.sort();
  return out;
}

SeparatorFamily induce_separators(const SeparatorFamily& parent, const Graph& g, const VertexSet& child, int k) {
  SeparatorFamily out(child, k);
  if (k < 0) return out;
  std::unordered_set<VertexSet, VertexSetHash> rejected;
  for (const auto& sp : parent) {
    VertexSet s = sp & child;
    if (s.count() > k || out.contains(s) || rejected.contains(s)) continue;
    if (is_minimal_separator(g, child, s))
      out.insert(s);
    else
      rejected.insert(std::move(s));
  }
  out.sort();
  return out;
}

SeparatorFamily star_constrained_enumeration(const Graph& g, const VertexSet& host, int a, int k,
                                             const EnumerationLimits& limits) {
  SeparatorFamily all(host, host.count());
  if (k < 0) return SeparatorFamily(host, k);
  const VertexSet around = closed_neighborhood(g, a) & host;
  auto accept = [&](const VertexSet& s) {
    if (s.test(a)) return false;
    VertexSet side = component_of(g, host - s, a);
    if (!side.subset_of(around)) return false;
    if ((neighborhood_set(g, side) & host) != s) return false;
    if (!is_star(g, side)) return false;
    return is_minimal_separator(g, host, s);
  };
  berry_closure(g, host, close_candidates(g, host, a), -1, accept, limits, OnBudget::Throw, all);
  SeparatorFamily out = all.truncated(k);
  out.sort();
  return out;
}

bool star_anchor_feasible(const Graph& g, const VertexSet& host, int a) {
  VertexSet near = closed_neighborhood(g, a) & host;
  near |= neighborhood_set(g, near) & host;
  for (const auto& c : component_sets(g, host - near))
    if (!is_star(g, c)) return false;
  return true;
}

}  // namespace treedepth
