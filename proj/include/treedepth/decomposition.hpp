#pragma once

#include <utility>
#include <vector>

#include "treedepth/graph.hpp"

namespace treedepth {

inline constexpr int kRoot = -1;

/// Rooted elimination forest over all vertices of a graph.
struct TreedepthDecomposition {
  std::vector<int> parent;  // kRoot for roots
  int depth = 0;
};

/// Elimination forest over a subset of the vertices, as (vertex, parent)
/// links in global indices. Used for solver witnesses and memo entries.
struct PartialDecomposition {
  std::vector<std::pair<int, int>> links;
  int depth = 0;

  /// A single chain in the given order (first element is the root).
  static PartialDecomposition chain(const std::vector<int>& order);

  /// Places `top` as a chain above every root of `below`.
  static PartialDecomposition stack(const std::vector<int>& top, const std::vector<PartialDecomposition>& below);

  /// Disjoint union of forests.
  static PartialDecomposition merge(const std::vector<PartialDecomposition>& parts);
};

/// Length in vertices of the longest root-to-leaf chain, or -1 when the parent
/// links contain a cycle or point outside the array.
int forest_depth(const std::vector<int>& parent);

/// True iff the parent links form a forest, `dec.depth` equals its height, and
/// every edge of g joins an ancestor-descendant pair.
bool verify(const Graph& g, const TreedepthDecomposition& dec);

/// Expands a partial decomposition covering all of g's vertices.
TreedepthDecomposition to_full(int n, const PartialDecomposition& part);

/// Restriction to x: each vertex in x is re-parented to its nearest proper
/// ancestor inside x.
PartialDecomposition restrict_to(const TreedepthDecomposition& dec, const VertexSet& x);

/// Vertex ranking derived from depths: rank = depth + 1 - level, roots at
/// level 1.
std::vector<int> ranking_from_decomposition(const TreedepthDecomposition& dec);

/// Elimination forest built from a valid vertex ranking: in each component
/// the unique top-ranked vertex becomes the root. Height <= max rank.
TreedepthDecomposition decomposition_from_ranking(const Graph& g, const std::vector<int>& rank);

/// True iff equal ranks are always separated by a strictly higher rank.
bool is_valid_ranking(const Graph& g, const std::vector<int>& rank);

}  // namespace treedepth
