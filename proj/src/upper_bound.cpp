#include "treedepth/upper_bound.hpp"

#include <algorithm>
#include <stdexcept>
#include <optional>
#include <tuple>
#include <unordered_map>

#include "treedepth/preprocess.hpp"

namespace treedepth {

namespace {

long long fill_cost(const Graph& h, int v) {
  long long twice = 0;
  VertexSet rest = h.all() - closed_neighborhood(h, v);
  for (const auto& c : components(h, rest)) {
    const VertexSet& s = c.boundary;
    for (int a : s) twice += (s - h.neighbors(a)).count() - 1;
  }
  return twice / 2;
}

}  // namespace

Triangulation lb_triang(const Graph& g) {
  Triangulation out{g, {}};
  Graph& h = out.filled;
  const int n = g.n();
  std::vector<long long> cost(static_cast<std::size_t>(n), -1);
  VertexSet pending = g.all();
  while (!pending.empty()) {
    int best = -1;
    for (int v : pending) {
      if (cost[v] < 0) cost[v] = fill_cost(h, v);
      if (best == -1 || cost[v] < cost[best]) best = v;
    }
    pending.reset(best);
    bool changed = false;
    VertexSet rest = h.all() - closed_neighborhood(h, best);
    for (const auto& c : components(h, rest)) {
      std::vector<int> s = c.boundary.to_vector();
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          if (h.add_edge(s[i], s[j])) {
            out.fill_edges.emplace_back(s[i], s[j]);
            changed = true;
          }
    }
    if (changed) std::fill(cost.begin(), cost.end(), -1);
  }
  return out;
}

std::vector<int> maximum_cardinality_search(const Graph& g, const VertexSet& x) {
  std::vector<int> weight(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> order;
  VertexSet pending = x;
  while (!pending.empty()) {
    int pick = -1;
    for (int v : pending)
      if (pick == -1 || weight[v] > weight[pick]) pick = v;
    order.push_back(pick);
    pending.reset(pick);
    for (int w : g.neighbors(pick) & pending) ++weight[w];
  }
  return order;
}

bool is_chordal(const Graph& g) {
  std::vector<int> order = maximum_cardinality_search(g, g.all());
  VertexSet earlier(g.n());
  std::vector<int> position(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  for (int v : order) {
    VertexSet m = g.neighbors(v) & earlier;
    if (!m.empty()) {
      int latest = -1;
      for (int w : m)
        if (latest == -1 || position[w] > position[latest]) latest = w;
      m.reset(latest);
      if (!m.subset_of(g.neighbors(latest))) return false;
    }
    earlier.set(v);
  }
  return true;
}

std::vector<VertexSet> chordal_minimal_separators(const Graph& h, const VertexSet& x) {
  std::vector<int> order = maximum_cardinality_search(h, x);
  std::vector<VertexSet> out;
  VertexSet earlier(h.n());
  int prev = -1;
  for (int v : order) {
    VertexSet m = h.neighbors(v) & earlier;
    int label = m.count();
    if (prev >= 0 && label <= prev && label > 0 && std::find(out.begin(), out.end(), m) == out.end())
      out.push_back(m);
    prev = label;
    earlier.set(v);
  }
  return out;
}

int chordal_max_clique(const Graph& h, const VertexSet& x) {
  std::vector<int> order = maximum_cardinality_search(h, x);
  VertexSet earlier(h.n());
  int best = 0;
  for (int v : order) {
    best = std::max(best, h.neighbors(v).intersection_count(earlier) + 1);
    earlier.set(v);
  }
  return best;
}

namespace {

class ChordalBrancher {
 public:
  explicit ChordalBrancher(const Graph& h) : h_(h) {}

  PartialDecomposition solve(const VertexSet& x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    PartialDecomposition result = compute(x);
    memo_.emplace(x, result);
    return result;
  }

 private:
  static constexpr int kWidth = 3;
  static constexpr long long kWideBudget = 20'000;

  PartialDecomposition compute(const VertexSet& x) {
    const int size = x.count();
    if (size <= 2 || is_clique(h_, x)) return PartialDecomposition::chain(x.to_vector());
    if (induced_edge_count(h_, x) == size - 1) return tree_decomposition(x);

    struct Candidate {
      VertexSet sep;
      std::vector<VertexSet> parts;
      int largest;
    };
    std::vector<Candidate> candidates;
    for (auto& s : chordal_minimal_separators(h_, x)) {
      auto parts = component_sets(h_, x - s);
      int largest = 0;
      for (const auto& p : parts) largest = std::max(largest, p.count());
      candidates.push_back({std::move(s), std::move(parts), largest});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      int ca = a.sep.count();
      int cb = b.sep.count();
      return std::tie(ca, a.largest) < std::tie(cb, b.largest) ||
             (ca == cb && a.largest == b.largest && lex_less(a.sep, b.sep));
    });

    const int floor = chordal_max_clique(h_, x);
    const std::size_t width = ++evaluations_ < kWideBudget ? kWidth : 1;
    std::optional<PartialDecomposition> best;
    for (std::size_t i = 0; i < candidates.size() && i < width; ++i) {
      std::vector<PartialDecomposition> below;
      for (const auto& p : candidates[i].parts) below.push_back(solve(p));
      auto cand = PartialDecomposition::stack(candidates[i].sep.to_vector(), below);
      if (!best || cand.depth < best->depth) best = std::move(cand);
      if (best->depth <= floor) break;
    }
    if (!best) return PartialDecomposition::chain(x.to_vector());
    return *best;
  }

  PartialDecomposition tree_decomposition(const VertexSet& x) {
    std::vector<int> local_to_global;
    Graph tree = induced_subgraph(h_, x, &local_to_global);
    TreeRanking ranking = schaffer_ranking(tree, 0);
    TreedepthDecomposition local = decomposition_from_ranking(tree, ranking.rank);
    PartialDecomposition out;
    for (std::size_t i = 0; i < local_to_global.size(); ++i) {
      int p = local.parent[i];
      out.links.emplace_back(local_to_global[i], p == kRoot ? kRoot : local_to_global[p]);
    }
    out.depth = local.depth;
    return out;
  }

  const Graph& h_;
  std::unordered_map<VertexSet, PartialDecomposition, VertexSetHash> memo_;
  long long evaluations_ = 0;
};

}  // namespace

TreedepthDecomposition chordal_td_heuristic(const Graph& h) {
  if (!is_chordal(h)) throw std::invalid_argument("chordal_td_heuristic: graph is not chordal");
  ChordalBrancher brancher(h);
  std::vector<PartialDecomposition> parts;
  for (const auto& c : component_sets(h, h.all())) parts.push_back(brancher.solve(c));
  return to_full(h.n(), PartialDecomposition::merge(parts));
}

UpperBound compute_upper_bound(const Graph& g) {
  if (g.n() == 0) return {};
  Triangulation tri = lb_triang(g);
  UpperBound out;
  out.decomposition = chordal_td_heuristic(tri.filled);
  out.depth = out.decomposition.depth;
  if (!verify(g, out.decomposition)) throw std::logic_error("upper bound decomposition failed verification");
  return out;
}

}  // namespace treedepth
