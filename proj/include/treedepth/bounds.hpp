#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "treedepth/decomposition.hpp"
#include "treedepth/graph.hpp"

namespace treedepth {

/// Known bounds lower <= td(G[key]) <= upper. When present, `witness` is a
/// decomposition of G[key] of depth `upper`.
struct BoundEntry {
  VertexSet key;
  int lower = 1;
  int upper = 0;
  std::optional<PartialDecomposition> witness;
};

/// Open-addressing hash table (linear probing, power-of-two capacity, grown
/// at load factor 0.5) keyed by exact vertex set. Insertions only tighten.
class MemoTable {
 public:
  MemoTable();

  const BoundEntry* get(const VertexSet& key) const;

  /// Merges by max of lowers and min of uppers; a witness is kept only with
  /// the upper bound it certifies. Throws std::logic_error if the merge
  /// would leave lower > upper.
  const BoundEntry& put(BoundEntry entry);

  std::size_t size() const { return entries_.size(); }
  const std::vector<BoundEntry>& entries() const { return entries_; }
  void clear();

 private:
  std::size_t find_slot(const VertexSet& key) const;
  void grow();

  std::vector<std::int32_t> slots_;
  std::vector<BoundEntry> entries_;
};

/// Stores (X', lower bound) pairs and answers "largest lower bound of a
/// stored subset of X". Buckets are keyed by X' ∩ V' for a sampled vertex set
/// V', so every stored subset of X sits under a sub-signature of X ∩ V'.
class SubsetStore {
 public:
  explicit SubsetStore(int universe, std::uint64_t seed = 0x5eed5eedULL);

  void insert(const VertexSet& x, int lower);

  /// max lower(X') over stored X' ⊆ x, or 1 when there is none.
  int query(const VertexSet& x) const;

  /// Replaces the sample and rebuilds the buckets; used by tests to force a
  /// specific signature width.
  void set_sample(const std::vector<int>& sample);

  std::size_t size() const { return items_.size(); }
  const std::vector<int>& sample() const { return sample_; }

 private:
  struct Item {
    VertexSet set;
    int lower;
  };
  std::uint64_t signature(const VertexSet& x) const;
  void resample();
  void rebuild();

  int universe_;
  std::uint64_t rng_state_;
  std::vector<int> sample_;
  std::vector<Item> items_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::size_t rebuilt_at_ = 0;
  bool fixed_sample_ = false;
};

/// Contraction-degeneracy lower bound (MMD+ with the least-common-neighbour
/// rule), plus one.
int mmd_plus_lb(const Graph& g, const VertexSet& x);

/// Lower bound from the longest path and cycle found by depth-first search.
int dfs_path_cycle_lb(const Graph& g, const VertexSet& x);

/// Isomorphism-invariant fingerprint of an induced subgraph.
struct IsoKey {
  int vertices = 0;
  long long edges = 0;
  std::vector<int> degrees;           // sorted
  std::vector<std::uint64_t> colors;  // sorted refined colours

  friend bool operator==(const IsoKey&, const IsoKey&) = default;
  std::uint64_t hash() const;
};

IsoKey iso_key(const Graph& g, const VertexSet& x);

/// Transfers lower bounds between isomorphic induced subgraphs. A fingerprint
/// match is confirmed by an exact, budgeted backtracking isomorphism test.
class IsoTable {
 public:
  static constexpr int kMaxVertices = 64;

  explicit IsoTable(const Graph& g, std::size_t step_budget = 200'000);

  /// Largest lower bound among stored sets isomorphic to G[x].
  std::optional<int> lookup(const VertexSet& x) const;
  void insert(const VertexSet& x, int lower);

  std::size_t size() const { return count_; }

 private:
  struct Record {
    IsoKey key;
    std::vector<std::uint64_t> rows;     // local adjacency
    std::vector<std::uint64_t> colours;  // per local vertex
    int lower;
  };
  Record make_record(const VertexSet& x, int lower) const;
  bool isomorphic(const Record& a, const Record& b) const;

  const Graph* graph_;
  std::size_t step_budget_;
  std::unordered_map<std::uint64_t, std::vector<Record>> table_;
  std::size_t count_ = 0;
};

}  // namespace treedepth
