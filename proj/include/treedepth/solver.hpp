#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "treedepth/bounds.hpp"
#include "treedepth/decomposition.hpp"
#include "treedepth/graph.hpp"
#include "treedepth/separators.hpp"

namespace treedepth {

enum class Outcome { Yes, No, Unknown };
enum class EnumerationMode { Heuristic, Exact };

/// Answer to "td(G[X]) <= k?". Yes carries a decomposition of depth <= k.
/// No is a certificate only in Exact mode.
struct DecideResult {
  Outcome outcome = Outcome::No;
  std::optional<PartialDecomposition> decomposition;
};

struct SolverOptions {
  bool preprocess = true;
  bool verify = true;
  std::size_t separator_budget = 2'000'000;
};

struct SolverStats {
  long long nodes = 0;
  long long separators_enumerated = 0;
  long long memo_hits = 0;
  long long subset_hits = 0;
  long long iso_hits = 0;
  long long bound_prunes = 0;
  long long special_k1 = 0;
  long long special_k2 = 0;
  long long inherited_families = 0;
  long long budget_aborts = 0;
};

/// Decision procedure over induced subgraphs of one fixed graph. Memo,
/// subset and isomorphism stores persist across calls.
class Solver {
 public:
  explicit Solver(const Graph& g, SolverOptions options = {});

  DecideResult decide(const VertexSet& x, int k, EnumerationMode mode,
                      const SeparatorFamily* inherited = nullptr);

  /// Separator N(v) of size <= k-1 leaving an independent set. G[x] must be
  /// connected and not a clique.
  std::optional<PartialDecomposition> special_case_k1(const VertexSet& x, int k) const;

  /// Separator of size <= k-2 leaving only stars. Throws BudgetExceeded from
  /// the star-constrained enumeration.
  std::optional<PartialDecomposition> special_case_k2(const VertexSet& x, int k);

  /// Best lower bound known or computable cheaply for G[x] (connected).
  int lower_bound(const VertexSet& x);
  /// As above, but may stop as soon as the bound exceeds k.
  int lower_bound(const VertexSet& x, int k);

  const Graph& graph() const { return *graph_; }
  const SolverStats& stats() const { return stats_; }
  const MemoTable& memo() const { return memo_; }

 private:
  DecideResult decide_connected(const VertexSet& x, int k, EnumerationMode mode, const SeparatorFamily* inherited);
  SeparatorFamily separators_for(const VertexSet& x, int bound, EnumerationMode mode,
                                 const SeparatorFamily* inherited);
  void record_yes(const VertexSet& x, const PartialDecomposition& dec);
  void record_lower(const VertexSet& x, int lower, bool share);

  const Graph* graph_;
  SolverOptions options_;
  EnumerationLimits limits_;
  SolverStats stats_;
  MemoTable memo_;
  SubsetStore subset_;
  IsoTable iso_;
  std::unordered_map<VertexSet, char, VertexSetHash> bounds_computed_;
  std::unordered_map<VertexSet, int, VertexSetHash> heuristic_failed_;
  std::unordered_map<VertexSet, std::shared_ptr<const SeparatorFamily>, VertexSetHash> exact_separators_;
  std::unordered_map<VertexSet, std::shared_ptr<const SeparatorFamily>, VertexSetHash> heuristic_separators_;
  std::size_t cached_separator_count_ = 0;
};

/// Convenience wrapper running a fresh Solver.
DecideResult decide(const Graph& g, const VertexSet& x, int k, EnumerationMode mode);

struct SolveResult {
  int treedepth = 0;
  TreedepthDecomposition decomposition;
  bool optimal = true;  // false when a budget abort left only an upper bound
  int lower_bound = 0;
  SolverStats stats;
  int reduced_vertices = 0;
};

/// Upper bound, preprocessing, heuristic descent, exact certification, lift.
SolveResult solve(const Graph& g, const SolverOptions& options = {});

}  // namespace treedepth
