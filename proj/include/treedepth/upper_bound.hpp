#pragma once

#include <vector>

#include "treedepth/decomposition.hpp"
#include "treedepth/graph.hpp"

namespace treedepth {

/// Chordal supergraph on the same vertex set.
struct Triangulation {
  Graph filled;
  std::vector<Edge> fill_edges;
};

/// LB-Triang, processing at each step the unprocessed vertex whose
/// saturation adds the fewest fill edges (ties to the lowest index).
Triangulation lb_triang(const Graph& g);

/// Maximum cardinality search order restricted to x (visit order).
std::vector<int> maximum_cardinality_search(const Graph& g, const VertexSet& x);

bool is_chordal(const Graph& g);

/// Minimal separators of the chordal graph H[x], read off a maximum
/// cardinality search. H[x] must be connected and chordal.
std::vector<VertexSet> chordal_minimal_separators(const Graph& h, const VertexSet& x);

/// Size of the largest clique of the chordal graph H[x].
int chordal_max_clique(const Graph& h, const VertexSet& x);

/// Treedepth decomposition of a chordal graph by greedy separator branching.
/// Throws std::invalid_argument if h is not chordal.
TreedepthDecomposition chordal_td_heuristic(const Graph& h);

struct UpperBound {
  int depth = 0;
  TreedepthDecomposition decomposition;
};

/// Triangulate, decompose the triangulation, and verify against g.
UpperBound compute_upper_bound(const Graph& g);

}  // namespace treedepth
