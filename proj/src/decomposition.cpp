#include "treedepth/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace treedepth {

PartialDecomposition PartialDecomposition::chain(const std::vector<int>& order) {
  PartialDecomposition out;
  int prev = kRoot;
  for (int v : order) {
    out.links.emplace_back(v, prev);
    prev = v;
  }
  out.depth = static_cast<int>(order.size());
  return out;
}

PartialDecomposition PartialDecomposition::stack(const std::vector<int>& top,
                                                 const std::vector<PartialDecomposition>& below) {
  PartialDecomposition out = chain(top);
  int anchor = top.empty() ? kRoot : top.back();
  int lower = 0;
  for (const auto& part : below) {
    for (auto [v, p] : part.links) out.links.emplace_back(v, p == kRoot ? anchor : p);
    lower = std::max(lower, part.depth);
  }
  out.depth += lower;
  return out;
}

PartialDecomposition PartialDecomposition::merge(const std::vector<PartialDecomposition>& parts) {
  return stack({}, parts);
}

int forest_depth(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  int best = 0;
  for (int s = 0; s < n; ++s) {
    if (level[s]) continue;
    path.clear();
    int v = s;
    // Walk up until a vertex with known level or a root.
    while (v != kRoot && level[v] == 0) {
      if (v < 0 || v >= n) return -1;
      level[v] = -1;  // on the current path
      path.push_back(v);
      v = parent[v];
      if (v != kRoot && (v < 0 || v >= n)) return -1;
    }
    if (v != kRoot && level[v] == -1) return -1;
    int base = v == kRoot ? 0 : level[v];
    for (auto it = path.rbegin(); it != path.rend(); ++it) level[*it] = ++base;
    best = std::max(best, base);
  }
  return best;
}

bool verify(const Graph& g, const TreedepthDecomposition& dec) {
  const int n = g.n();
  if (static_cast<int>(dec.parent.size()) != n) return false;
  int height = forest_depth(dec.parent);
  if (height < 0 || height != dec.depth) return false;

  // Ancestor sets as bit vectors, filled in root-first order.
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int l = 0;
    for (int u = v; u != kRoot; u = dec.parent[u]) ++l;
    level[v] = l;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return level[a] < level[b]; });
  std::vector<VertexSet> ancestors(static_cast<std::size_t>(n), VertexSet(n));
  for (int v : order) {
    int p = dec.parent[v];
    if (p != kRoot) {
      ancestors[v] = ancestors[p];
      ancestors[v].set(p);
    }
  }
  for (auto [u, v] : g.edges())
    if (!ancestors[u].test(v) && !ancestors[v].test(u)) return false;
  return true;
}

TreedepthDecomposition to_full(int n, const PartialDecomposition& part) {
  TreedepthDecomposition dec;
  dec.parent.assign(static_cast<std::size_t>(n), kRoot);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (auto [v, p] : part.links) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("partial decomposition does not cover the graph");
    seen[v] = 1;
    dec.parent[v] = p;
  }
  if (static_cast<int>(part.links.size()) != n) throw std::invalid_argument("partial decomposition does not cover the graph");
  dec.depth = forest_depth(dec.parent);
  return dec;
}

PartialDecomposition restrict_to(const TreedepthDecomposition& dec, const VertexSet& x) {
  PartialDecomposition out;
  std::vector<int> parent(dec.parent.size(), kRoot);
  for (int v : x) {
    int p = dec.parent[v];
    while (p != kRoot && !x.test(p)) p = dec.parent[p];
    parent[v] = p;
    out.links.emplace_back(v, p);
  }
  int best = 0;
  for (int v : x) {
    int l = 0;
    for (int u = v; u != kRoot; u = parent[u]) ++l;
    best = std::max(best, l);
  }
  out.depth = best;
  return out;
}

std::vector<int> ranking_from_decomposition(const TreedepthDecomposition& dec) {
  const int n = static_cast<int>(dec.parent.size());
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int l = 0;
    for (int u = v; u != kRoot; u = dec.parent[u]) ++l;
    rank[v] = dec.depth + 1 - l;
  }
  return rank;
}

TreedepthDecomposition decomposition_from_ranking(const Graph& g, const std::vector<int>& rank) {
  TreedepthDecomposition dec;
  dec.parent.assign(static_cast<std::size_t>(g.n()), kRoot);
  struct Task {
    VertexSet set;
    int parent;
  };
  std::vector<Task> stack;
  for (auto& c : component_sets(g, g.all())) stack.push_back({std::move(c), kRoot});
  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    int top = -1;
    for (int v : task.set)
      if (top == -1 || rank[v] > rank[top]) top = v;
    dec.parent[top] = task.parent;
    task.set.reset(top);
    for (auto& c : component_sets(g, task.set)) stack.push_back({std::move(c), top});
  }
  dec.depth = forest_depth(dec.parent);
  return dec;
}

bool is_valid_ranking(const Graph& g, const std::vector<int>& rank) {
  if (static_cast<int>(rank.size()) != g.n()) return false;
  std::vector<int> values(rank.begin(), rank.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int r : values) {
    VertexSet low(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (rank[v] <= r) low.set(v);
    for (const auto& comp : component_sets(g, low)) {
      int hits = 0;
      for (int v : comp)
        if (rank[v] == r) ++hits;
      if (hits > 1) return false;
    }
  }
  return true;
}

}  // namespace treedepth
