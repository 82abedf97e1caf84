#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "treedepth/decomposition.hpp"
#include "treedepth/graph.hpp"

namespace treedepth {

/// Strictly increasing positive ranks. Ordered by the largest element of the
/// symmetric difference: the set that owns it is the larger one.
class RankSet {
 public:
  RankSet() = default;
  explicit RankSet(std::vector<int> ranks);

  const std::vector<int>& ranks() const { return ranks_; }
  bool empty() const { return ranks_.empty(); }
  int size() const { return static_cast<int>(ranks_.size()); }
  int max() const { return ranks_.empty() ? 0 : ranks_.back(); }
  int sum() const;
  bool contains(int r) const;
  RankSet without(int r) const;

  friend bool operator==(const RankSet&, const RankSet&) = default;
  friend bool operator<(const RankSet& a, const RankSet& b);

 private:
  std::vector<int> ranks_;
};

/// Ranks visible from v: c(u) for every u reachable from v through vertices
/// ranked at most c(u).
RankSet visible_ranks(const Graph& g, const std::vector<int>& rank, int v);

struct TreeRanking {
  std::vector<int> rank;  // per vertex of the tree, >= 1
  RankSet visible;        // visible_ranks(tree, rank, root)
};

/// Optimal vertex ranking of a tree whose visible set from `root` is minimum
/// in the RankSet order. Bottom-up critical-list construction, linear in the
/// tree size. Throws std::invalid_argument when `tree` is not a tree.
TreeRanking schaffer_ranking(const Graph& tree, int root);

/// A ranking of `tree` whose visible set from `root` is contained in
/// `allowed`. Requires `allowed` to be no smaller than the optimum.
std::vector<int> ranking_within(const Graph& tree, int root, const RankSet& allowed);

/// Replacement of a pendant tree T attached at v by a path of cliques.
struct TreeEliminationStep {
  Graph before;
  std::vector<int> old_to_new;    // -1 for removed vertices
  std::vector<int> tree_vertices; // old indices; tree_local order
  Graph tree;                     // G[T] in tree_vertices order
  int tree_root = 0;              // local index of the attachment vertex
  std::vector<int> gadget_vertices;  // new indices, gadget_vertices[0] = v
  Graph gadget;                   // the replacement in gadget_vertices order
  RankSet ranks;
};

/// Deletion of a simplicial vertex dominated by a non-adjacent simplicial
/// vertex.
struct SimplicialStep {
  std::vector<int> old_to_new;
  int removed = 0;     // old index
  int dominator = 0;   // old index
  std::vector<int> removed_neighbors;    // old indices
  std::vector<int> dominator_neighbors;  // old indices
};

struct EdgeAdditionStep {
  std::vector<Edge> added;
};

using ReductionStep = std::variant<TreeEliminationStep, SimplicialStep, EdgeAdditionStep>;

/// Log of reductions from an original graph to a reduced one.
struct ReductionTrace {
  int original_n = 0;
  std::vector<ReductionStep> steps;

  bool empty() const { return steps.empty(); }
  void append(ReductionTrace&& other);
};

struct Reduction {
  Graph graph;
  ReductionTrace trace;
};

/// Replaces subset-maximal pendant trees by their clique-path gadgets until
/// no replacement shrinks the graph.
Reduction tree_eliminate(const Graph& g);

/// Removes simplicial vertices whose neighbourhood is contained in that of a
/// non-adjacent simplicial vertex, to a fixed point.
Reduction simplicial_rule(const Graph& g);

/// Minimum u,v vertex cut, or `cap` if it is at least `cap`.
int min_vertex_cut(const Graph& g, int u, int v, int cap);

/// Adds {u, v} for non-adjacent pairs whose minimum vertex cut is at least
/// `ub`, iterated to a fixed point. `ub` must bound td(g) from above.
Reduction shared_neighborhood_rule(const Graph& g, int ub);

/// Replays the trace backwards, turning a decomposition of the reduced graph
/// into one of the original graph of no greater depth.
TreedepthDecomposition lift_decomposition(const ReductionTrace& trace, const TreedepthDecomposition& dec);

struct PreprocessOptions {
  bool tree_elimination = true;
  bool simplicial = true;
  bool shared_neighborhood = true;
};

/// All reductions, repeated until none applies. `upper_bound` supplies a
/// certified upper bound for the current graph.
Reduction preprocess(const Graph& g, const std::function<int(const Graph&)>& upper_bound,
                     const PreprocessOptions& options = {});

}  // namespace treedepth
