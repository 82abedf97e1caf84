#include "treedepth/graph.hpp"

#include <stdexcept>
#include <string>

namespace treedepth {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v || adj_[u].test(v)) return false;
  adj_[u].set(v);
  adj_[v].set(u);
  return true;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

VertexSet neighborhood_set(const Graph& g, const VertexSet& x) {
  VertexSet out(g.n());
  for (int v : x) out |= g.neighbors(v);
  out -= x;
  return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet out = g.neighbors(v);
  out.set(v);
  return out;
}

namespace {

VertexSet grow(const Graph& g, VertexSet& remaining, int seed) {
  VertexSet comp(g.n());
  comp.set(seed);
  remaining.reset(seed);
  VertexSet frontier = comp;
  VertexSet reach(g.n());
  while (!frontier.empty()) {
    reach.clear();
    for (int v : frontier) reach |= g.neighbors(v);
    reach &= remaining;
    remaining -= reach;
    comp |= reach;
    std::swap(frontier, reach);
  }
  return comp;
}

}  // namespace

std::vector<Component> components(const Graph& g, const VertexSet& x, const VertexSet& host) {
  std::vector<Component> out;
  VertexSet remaining = x;
  for (int s = remaining.first(); s != -1; s = remaining.first()) {
    VertexSet comp = grow(g, remaining, s);
    VertexSet boundary = neighborhood_set(g, comp);
    boundary &= host;
    out.push_back({std::move(comp), std::move(boundary)});
  }
  return out;
}

std::vector<Component> components(const Graph& g, const VertexSet& x) { return components(g, x, g.all()); }

std::vector<VertexSet> component_sets(const Graph& g, const VertexSet& x) {
  std::vector<VertexSet> out;
  VertexSet remaining = x;
  for (int s = remaining.first(); s != -1; s = remaining.first()) out.push_back(grow(g, remaining, s));
  return out;
}

VertexSet component_of(const Graph& g, const VertexSet& x, int v) {
  VertexSet remaining = x;
  return grow(g, remaining, v);
}

bool is_connected(const Graph& g, const VertexSet& x) {
  int s = x.first();
  if (s == -1) return true;
  return component_of(g, x, s) == x;
}

bool is_clique(const Graph& g, const VertexSet& x) {
  for (int v : x) {
    VertexSet missing = x - g.neighbors(v);
    missing.reset(v);
    if (!missing.empty()) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& x) {
  for (int v : x)
    if (g.neighbors(v).intersects(x)) return false;
  return true;
}

long long induced_edge_count(const Graph& g, const VertexSet& x) {
  long long twice = 0;
  for (int v : x) twice += g.neighbors(v).intersection_count(x);
  return twice / 2;
}

bool is_star(const Graph& g, const VertexSet& x) {
  int size = x.count();
  if (induced_edge_count(g, x) != size - 1) return false;
  int hubs = 0;
  for (int v : x)
    if (g.neighbors(v).intersection_count(x) >= 2) ++hubs;
  return hubs <= 1;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x, std::vector<int>* local_to_global) {
  std::vector<int> order = x.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexSet row = g.neighbors(order[i]) & x;
    for (int w : row)
      if (local[w] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), local[w]);
  }
  if (local_to_global) *local_to_global = std::move(order);
  return out;
}

}  // namespace treedepth
