#include "treedepth/solver.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "treedepth/preprocess.hpp"
#include "treedepth/upper_bound.hpp"

namespace treedepth {

namespace {

constexpr std::size_t kSeparatorCacheLimit = 4'000'000;

DecideResult yes(PartialDecomposition dec) { return {Outcome::Yes, std::move(dec)}; }
DecideResult no() { return {Outcome::No, std::nullopt}; }
DecideResult unknown() { return {Outcome::Unknown, std::nullopt}; }

PartialDecomposition star_decomposition(const Graph& g, const VertexSet& star) {
  if (star.count() <= 2) return PartialDecomposition::chain(star.to_vector());
  int centre = -1;
  for (int v : star)
    if (g.neighbors(v).intersection_count(star) >= 2) centre = v;
  std::vector<PartialDecomposition> leaves;
  for (int v : star)
    if (v != centre) leaves.push_back(PartialDecomposition::chain({v}));
  return PartialDecomposition::stack({centre}, leaves);
}

}  // namespace

Solver::Solver(const Graph& g, SolverOptions options)
    : graph_(&g), options_(options), limits_{options.separator_budget}, subset_(g.n()), iso_(g) {}

void Solver::record_yes(const VertexSet& x, const PartialDecomposition& dec) {
  memo_.put({x, 1, dec.depth, dec});
}

void Solver::record_lower(const VertexSet& x, int lower, bool share) {
  memo_.put({x, lower, x.count(), std::nullopt});
  if (!share) return;
  subset_.insert(x, lower);
  iso_.insert(x, lower);
}

int Solver::lower_bound(const VertexSet& x) { return lower_bound(x, INT_MAX); }

int Solver::lower_bound(const VertexSet& x, int k) {
  int lb = 1;
  if (const BoundEntry* e = memo_.get(x)) lb = e->lower;
  auto settle = [&] {
    if (const BoundEntry* e = memo_.get(x); !e || e->lower < lb) record_lower(x, lb, false);
    return lb;
  };
  if (lb > k) return lb;
  if (!bounds_computed_.contains(x)) {
    bounds_computed_.emplace(x, 1);
    int computed = std::max(mmd_plus_lb(*graph_, x), dfs_path_cycle_lb(*graph_, x));
    if (computed > lb) lb = computed;
    if (lb > k) return settle();
  }
  int from_subsets = subset_.query(x);
  if (from_subsets > lb) {
    ++stats_.subset_hits;
    lb = from_subsets;
    if (lb > k) return settle();
  }
  if (auto transferred = iso_.lookup(x); transferred && *transferred > lb) {
    ++stats_.iso_hits;
    lb = *transferred;
  }
  return settle();
}

std::optional<PartialDecomposition> Solver::special_case_k1(const VertexSet& x, int k) const {
  for (int v : x) {
    VertexSet nb = graph_->neighbors(v) & x;
    if (nb.count() > k - 1) continue;
    VertexSet rest = x - nb;
    if (!is_independent(*graph_, rest)) continue;
    std::vector<PartialDecomposition> leaves;
    for (int w : rest) leaves.push_back(PartialDecomposition::chain({w}));
    return PartialDecomposition::stack(nb.to_vector(), leaves);
  }
  return std::nullopt;
}

std::optional<PartialDecomposition> Solver::special_case_k2(const VertexSet& x, int k) {
  if (k < 3) return std::nullopt;
  std::unordered_map<VertexSet, char, VertexSetHash> tried;
  for (int a : x) {
    if (!star_anchor_feasible(*graph_, x, a)) continue;
    SeparatorFamily family = star_constrained_enumeration(*graph_, x, a, k - 2, limits_);
    for (const auto& s : family) {
      if (!tried.emplace(s, 1).second) continue;
      auto parts = component_sets(*graph_, x - s);
      if (!std::all_of(parts.begin(), parts.end(), [&](const VertexSet& p) { return is_star(*graph_, p); }))
        continue;
      std::vector<PartialDecomposition> below;
      for (const auto& p : parts) below.push_back(star_decomposition(*graph_, p));
      return PartialDecomposition::stack(s.to_vector(), below);
    }
  }
  return std::nullopt;
}

SeparatorFamily Solver::separators_for(const VertexSet& x, int bound, EnumerationMode mode,
                                       const SeparatorFamily* inherited) {
  if (bound < 0) return SeparatorFamily(x, bound);
  SeparatorFamily out;
  if (inherited) {
    ++stats_.inherited_families;
    out = induce_separators(*inherited, *graph_, x, bound);
  } else {
    const bool exact = mode == EnumerationMode::Exact;
    auto& cache = exact ? exact_separators_ : heuristic_separators_;
    auto it = cache.find(x);
    if (it == cache.end() || it->second->size_bound() < bound) {
      auto fam = std::make_shared<const SeparatorFamily>(exact ? enumerate_exact(*graph_, x, bound, limits_)
                                                               : enumerate_heuristic(*graph_, x, bound, limits_));
      cached_separator_count_ += fam->size();
      cache[x] = fam;
      out = *fam;
    } else {
      out = it->second->truncated(bound);
    }
  }
  if (cached_separator_count_ > kSeparatorCacheLimit) {
    exact_separators_.clear();
    heuristic_separators_.clear();
    cached_separator_count_ = 0;
  }
  stats_.separators_enumerated += static_cast<long long>(out.size());
  return out;
}

DecideResult Solver::decide(const VertexSet& x, int k, EnumerationMode mode, const SeparatorFamily* inherited) {
  if (x.empty()) return yes({});
  if (k <= 0) return no();
  auto parts = component_sets(*graph_, x);
  if (parts.size() == 1) return decide_connected(x, k, mode, inherited);

  std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.count() > b.count(); });
  std::vector<PartialDecomposition> found;
  bool missing = false;
  for (const auto& c : parts) {
    DecideResult r = decide_connected(c, k, mode, nullptr);
    if (r.outcome == Outcome::No) return no();
    if (r.outcome == Outcome::Unknown) {
      missing = true;
      continue;
    }
    found.push_back(std::move(*r.decomposition));
  }
  if (missing) return unknown();
  return yes(PartialDecomposition::merge(found));
}

DecideResult Solver::decide_connected(const VertexSet& x, int k, EnumerationMode mode,
                                      const SeparatorFamily* inherited) {
  ++stats_.nodes;
  const int size = x.count();
  if (size <= k) return yes(PartialDecomposition::chain(x.to_vector()));
  if (is_clique(*graph_, x)) {
    // td = |x| > k
    memo_.put({x, size, size, PartialDecomposition::chain(x.to_vector())});
    return no();
  }
  if (const BoundEntry* e = memo_.get(x)) {
    if (e->lower > k) {
      ++stats_.memo_hits;
      return no();
    }
    if (e->upper <= k && e->witness) {
      ++stats_.memo_hits;
      return yes(*e->witness);
    }
  }
  if (mode == EnumerationMode::Heuristic) {
    if (auto it = heuristic_failed_.find(x); it != heuristic_failed_.end() && it->second >= k) return no();
  }
  if (lower_bound(x, k) > k) {
    ++stats_.bound_prunes;
    return no();
  }

  if (auto dec = special_case_k1(x, k)) {
    ++stats_.special_k1;
    record_yes(x, *dec);
    return yes(std::move(*dec));
  }

  bool incomplete = false;
  try {
    if (auto dec = special_case_k2(x, k)) {
      ++stats_.special_k2;
      record_yes(x, *dec);
      return yes(std::move(*dec));
    }
  } catch (const BudgetExceeded&) {
    ++stats_.budget_aborts;
    incomplete = true;
  }

  SeparatorFamily family;
  try {
    family = separators_for(x, k - 3, mode, inherited);
  } catch (const BudgetExceeded&) {
    ++stats_.budget_aborts;
    return mode == EnumerationMode::Exact ? unknown() : no();
  }

  struct Branch {
    const VertexSet* sep;
    std::vector<VertexSet> parts;
    int largest;
  };
  std::vector<Branch> branches;
  branches.reserve(family.size());
  for (const auto& s : family) {
    auto parts = component_sets(*graph_, x - s);
    std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.count() > b.count(); });
    int largest = parts.empty() ? 0 : parts.front().count();
    branches.push_back({&s, std::move(parts), largest});
  }
  std::stable_sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
    int ca = a.sep->count();
    int cb = b.sep->count();
    if (ca != cb) return ca < cb;
    return a.largest < b.largest;
  });

  for (const auto& br : branches) {
    const int budget = k - br.sep->count();
    bool hopeless = false;
    for (const auto& c : br.parts) {
      if (c.count() <= budget) break;
      if (const BoundEntry* e = memo_.get(c); e && e->lower > budget) {
        hopeless = true;
        break;
      }
    }
    if (hopeless) continue;

    std::vector<PartialDecomposition> below;
    bool ok = true;
    for (const auto& c : br.parts) {
      const SeparatorFamily* pass = 2 * c.count() > size ? &family : nullptr;
      DecideResult r = decide_connected(c, budget, mode, pass);
      if (r.outcome != Outcome::Yes) {
        if (r.outcome == Outcome::Unknown) incomplete = true;
        ok = false;
        break;
      }
      below.push_back(std::move(*r.decomposition));
    }
    if (!ok) continue;
    PartialDecomposition dec = PartialDecomposition::stack(br.sep->to_vector(), below);
    record_yes(x, dec);
    return yes(std::move(dec));
  }

  if (mode == EnumerationMode::Exact) {
    if (incomplete) return unknown();
    record_lower(x, k + 1, true);
    return no();
  }
  int& failed = heuristic_failed_[x];
  failed = std::max(failed, k);
  return no();
}

DecideResult decide(const Graph& g, const VertexSet& x, int k, EnumerationMode mode) {
  Solver solver(g);
  return solver.decide(x, k, mode);
}

SolveResult solve(const Graph& g, const SolverOptions& options) {
  SolveResult res;
  if (g.n() == 0) return res;

  auto upper = [](const Graph& h) { return compute_upper_bound(h).depth; };
  Reduction reduced = options.preprocess ? preprocess(g, upper) : Reduction{g, {g.n(), {}}};
  const Graph& h = reduced.graph;
  res.reduced_vertices = h.n();

  std::vector<PartialDecomposition> parts;
  int global_lb = 0;
  if (h.n() > 0) {
    UpperBound ub = compute_upper_bound(h);
    Solver solver(h, options);

    struct Piece {
      VertexSet set;
      PartialDecomposition best;
    };
    std::vector<Piece> pieces;
    for (auto& c : component_sets(h, h.all())) {
      PartialDecomposition best = restrict_to(ub.decomposition, c);
      pieces.push_back({std::move(c), std::move(best)});
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return a.best.depth > b.best.depth; });

    for (auto& piece : pieces) {
      int lb = solver.lower_bound(piece.set);
      auto settled = [&] { return piece.best.depth <= std::max(global_lb, lb); };
      while (!settled()) {
        DecideResult r = solver.decide(piece.set, piece.best.depth - 1, EnumerationMode::Heuristic);
        if (r.outcome != Outcome::Yes) break;
        piece.best = std::move(*r.decomposition);
      }
      while (!settled()) {
        DecideResult r = solver.decide(piece.set, piece.best.depth - 1, EnumerationMode::Exact);
        if (r.outcome == Outcome::Yes) {
          piece.best = std::move(*r.decomposition);
        } else {
          if (r.outcome == Outcome::No) lb = piece.best.depth;
          break;
        }
      }
      global_lb = std::max(global_lb, lb);
      parts.push_back(std::move(piece.best));
    }
    res.stats = solver.stats();
  }

  TreedepthDecomposition dec = to_full(h.n(), PartialDecomposition::merge(parts));
  res.decomposition = lift_decomposition(reduced.trace, dec);
  res.treedepth = res.decomposition.depth;
  res.lower_bound = std::min(global_lb, res.treedepth);
  res.optimal = res.treedepth <= global_lb;
  if (options.verify && !verify(g, res.decomposition))
    throw std::logic_error("solver produced an invalid treedepth decomposition");
  return res;
}

}  // namespace treedepth
