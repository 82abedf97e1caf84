#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "treedepth/graph.hpp"

namespace treedepth {

/// Raised when an enumeration would exceed its family-size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  std::size_t max_family = 2'000'000;
};

/// Deduplicated set of minimal separators of G[host], each of size at most
/// `size_bound`. Members keep insertion order until `sort()` is called.
class SeparatorFamily {
 public:
  SeparatorFamily() = default;
  SeparatorFamily(VertexSet host, int size_bound) : host_(std::move(host)), size_bound_(size_bound) {}

  const VertexSet& host() const { return host_; }
  int size_bound() const { return size_bound_; }
  const std::vector<VertexSet>& separators() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const VertexSet& s) const { return index_.contains(s); }

  /// Returns false if already present.
  bool insert(const VertexSet& s);

  /// Orders members by (size, lexicographic bit pattern).
  void sort();

  /// Members of size <= k, as a new family.
  SeparatorFamily truncated(int k) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  VertexSet host_;
  int size_bound_ = 0;
  std::vector<VertexSet> members_;
  std::unordered_set<VertexSet, VertexSetHash> index_;
};

/// S is a minimal separator of G[host] iff G[host \ S] has at least two
/// components C with N(C) ∩ host = S.
bool is_minimal_separator(const Graph& g, const VertexSet& host, const VertexSet& s);

/// {N(C) : C a component of G[host \ N[a]]}, keeping only minimal separators.
SeparatorFamily close_separators(const Graph& g, const VertexSet& host, int a);

/// Truncated Berry closure: separators larger than k are dropped as soon as
/// they are generated. Returns a subset of the minimal separators of size <= k.
/// Stops silently when the budget is reached.
SeparatorFamily enumerate_heuristic(const Graph& g, const VertexSet& host, int k,
                                    const EnumerationLimits& limits = {});

/// Every minimal separator of G[host] (full Berry closure). Throws
/// BudgetExceeded past `limits.max_family`.
SeparatorFamily enumerate_all(const Graph& g, const VertexSet& host, const EnumerationLimits& limits = {});

/// Exactly the minimal separators of G[host] with at most k vertices.
SeparatorFamily enumerate_exact(const Graph& g, const VertexSet& host, int k, const EnumerationLimits& limits = {});

/// {S' ∩ child : S' in parent} restricted to minimal separators of G[child]
/// with at most k vertices. Exact whenever `parent` contains every minimal
/// separator of its host with at most k + |N(child) ∩ host| vertices.
SeparatorFamily induce_separators(const SeparatorFamily& parent, const Graph& g, const VertexSet& child, int k);

/// Minimal separators S of G[host] with |S| <= k such that the component of
/// G[host \ S] containing a is full, lies inside N[a], and induces a star.
/// Throws BudgetExceeded past `limits.max_family`.
SeparatorFamily star_constrained_enumeration(const Graph& g, const VertexSet& host, int a, int k,
                                             const EnumerationLimits& limits = {});

/// False when G[host \ (N[a] ∪ N(N[a]))] has a non-star component; then no
/// separator with a star component around a can leave only star components.
bool star_anchor_feasible(const Graph& g, const VertexSet& host, int a);

}  // namespace treedepth
