#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace oracle {

namespace {

struct Local {
  std::vector<int> ids;
  std::vector<std::uint32_t> adj;
};

Local localise(const Graph& g, const VertexSet& x, int cap) {
  Local l;
  l.ids = x.to_vector();
  if (static_cast<int>(l.ids.size()) > cap) throw std::invalid_argument("oracle: instance too large");
  l.adj.assign(l.ids.size(), 0);
  for (std::size_t i = 0; i < l.ids.size(); ++i)
    for (std::size_t j = 0; j < l.ids.size(); ++j)
      if (g.adjacent(l.ids[i], l.ids[j])) l.adj[i] |= 1u << j;
  return l;
}

std::uint32_t reach(const Local& l, std::uint32_t within, int start) {
  std::uint32_t seen = 1u << start;
  std::uint32_t frontier = seen;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint32_t fresh = l.adj[v] & within & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

}  // namespace

int treedepth(const Graph& g, const VertexSet& x) {
  Local l = localise(g, x, 20);
  const std::uint32_t full = l.ids.empty() ? 0 : static_cast<std::uint32_t>((1ull << l.ids.size()) - 1);
  std::vector<std::int8_t> memo(static_cast<std::size_t>(full) + 1, -1);
  // subsets in increasing numeric order only have smaller subsets before them
  memo[0] = 0;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    std::uint32_t first = reach(l, s, std::countr_zero(s));
    if (first != s) {
      int best = 0;
      std::uint32_t rest = s;
      while (rest) {
        std::uint32_t c = reach(l, s, std::countr_zero(rest));
        best = std::max<int>(best, memo[c]);
        rest &= ~c;
      }
      memo[s] = static_cast<std::int8_t>(best);
    } else {
      int best = 1 << 20;
      for (std::uint32_t r = s; r; r &= r - 1) best = std::min<int>(best, memo[s & ~(r & -r)]);
      memo[s] = static_cast<std::int8_t>(best + 1);
    }
    if (s == full) break;
  }
  return memo[full];
}

int treedepth(const Graph& g) { return treedepth(g, g.all()); }

std::vector<VertexSet> minimal_separators(const Graph& g, const VertexSet& host, int k) {
  Local l = localise(g, host, 16);
  const int n = static_cast<int>(l.ids.size());
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((1ull << n) - 1);
  std::vector<VertexSet> out;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (std::popcount(s) <= k) {
      std::uint32_t rest = full & ~s;
      int full_components = 0;
      while (rest) {
        std::uint32_t c = reach(l, full & ~s, std::countr_zero(rest));
        rest &= ~c;
        std::uint32_t boundary = 0;
        for (std::uint32_t t = c; t; t &= t - 1) boundary |= l.adj[std::countr_zero(t)];
        if ((boundary & s) == s) ++full_components;
      }
      if (full_components >= 2) {
        VertexSet sep(g.n());
        for (std::uint32_t t = s; t; t &= t - 1) sep.set(l.ids[std::countr_zero(t)]);
        out.push_back(sep);
      }
    }
    if (s == full) break;
  }
  return out;
}

namespace {

bool ranking_ok(const Local& l, const std::vector<int>& rank) {
  const int n = static_cast<int>(l.ids.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rank[u] != rank[v]) continue;
      std::uint32_t low = 0;
      for (int w = 0; w < n; ++w)
        if (rank[w] <= rank[u]) low |= 1u << w;
      if (reach(l, low, u) >> v & 1u) return false;
    }
  return true;
}

bool assign(const Local& l, std::vector<int>& rank, int i, int m) {
  if (i == static_cast<int>(rank.size())) return ranking_ok(l, rank);
  for (int r = 1; r <= m; ++r) {
    rank[i] = r;
    if (assign(l, rank, i + 1, m)) return true;
  }
  return false;
}

}  // namespace

int min_ranking_value(const Graph& g) {
  Local l = localise(g, g.all(), 9);
  std::vector<int> rank(l.ids.size(), 0);
  if (rank.empty()) return 0;
  for (int m = 1;; ++m)
    if (assign(l, rank, 0, m)) return m;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

}  // namespace oracle
