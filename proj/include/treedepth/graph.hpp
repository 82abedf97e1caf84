#pragma once

#include <span>
#include <utility>
#include <vector>

#include "treedepth/vertex_set.hpp"

namespace treedepth {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 with bit-set adjacency rows.
///
/// Self-loops and repeated edges are dropped on insertion, so adjacency is
/// always symmetric and irreflexive.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  long long edge_count() const;

  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet none() const { return VertexSet(n_); }

  /// Edges (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  /// Returns false when the edge was a self-loop or already present.
  bool add_edge(int u, int v);

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// A connected piece of some vertex set together with its boundary.
struct Component {
  VertexSet vertices;
  VertexSet boundary;
};

/// N(X): union of the neighborhoods of X, minus X itself.
VertexSet neighborhood_set(const Graph& g, const VertexSet& x);

/// N[v].
VertexSet closed_neighborhood(const Graph& g, int v);

/// Connected components of G[x], ordered by smallest member. Each boundary is
/// N(C) restricted to `host`.
std::vector<Component> components(const Graph& g, const VertexSet& x, const VertexSet& host);
std::vector<Component> components(const Graph& g, const VertexSet& x);

/// Vertex sets of the components of G[x] without boundaries.
std::vector<VertexSet> component_sets(const Graph& g, const VertexSet& x);

/// The component of G[x] that contains v (v must be in x).
VertexSet component_of(const Graph& g, const VertexSet& x, int v);

bool is_connected(const Graph& g, const VertexSet& x);
bool is_clique(const Graph& g, const VertexSet& x);
bool is_independent(const Graph& g, const VertexSet& x);

/// True iff G[x] is K_{1,t} for some t >= 0. Assumes G[x] is connected.
bool is_star(const Graph& g, const VertexSet& x);

/// Number of edges of G[x].
long long induced_edge_count(const Graph& g, const VertexSet& x);

/// G[x] relabelled to 0..|x|-1 in ascending order of the original indices.
/// `local_to_global`, when given, receives that order.
Graph induced_subgraph(const Graph& g, const VertexSet& x, std::vector<int>* local_to_global = nullptr);

}  // namespace treedepth
