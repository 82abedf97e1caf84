#include "treedepth/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace treedepth {

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

int ceil_log2(long long x) { return x <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned long long>(x - 1))); }

}  // namespace

// ---------------------------------------------------------------------------
// MemoTable

MemoTable::MemoTable() : slots_(64, -1) {}

std::size_t MemoTable::find_slot(const VertexSet& key) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = key.hash() & mask;
  while (slots_[i] != -1 && !(entries_[static_cast<std::size_t>(slots_[i])].key == key)) i = (i + 1) & mask;
  return i;
}

const BoundEntry* MemoTable::get(const VertexSet& key) const {
  std::size_t i = find_slot(key);
  return slots_[i] == -1 ? nullptr : &entries_[static_cast<std::size_t>(slots_[i])];
}

const BoundEntry& MemoTable::put(BoundEntry entry) {
  if (entry.upper <= 0) entry.upper = entry.key.count();
  std::size_t i = find_slot(entry.key);
  if (slots_[i] == -1) {
    if (entry.lower > entry.upper) throw std::logic_error("memo entry with crossed bounds");
    if ((entries_.size() + 1) * 2 > slots_.size()) {
      grow();
      i = find_slot(entry.key);
    }
    slots_[i] = static_cast<std::int32_t>(entries_.size());
    entries_.push_back(std::move(entry));
    return entries_.back();
  }
  BoundEntry& cur = entries_[static_cast<std::size_t>(slots_[i])];
  int lower = std::max(cur.lower, entry.lower);
  if (entry.upper < cur.upper || (entry.upper == cur.upper && !cur.witness && entry.witness)) {
    cur.upper = entry.upper;
    cur.witness = std::move(entry.witness);
  }
  if (lower > cur.upper) throw std::logic_error("memo merge crossed lower and upper bounds");
  cur.lower = lower;
  return cur;
}

void MemoTable::grow() {
  std::vector<std::int32_t> fresh(slots_.size() * 2, -1);
  slots_.swap(fresh);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    std::size_t i = entries_[e].key.hash() & mask;
    while (slots_[i] != -1) i = (i + 1) & mask;
    slots_[i] = static_cast<std::int32_t>(e);
  }
}

void MemoTable::clear() {
  entries_.clear();
  slots_.assign(64, -1);
}

// ---------------------------------------------------------------------------
// SubsetStore

SubsetStore::SubsetStore(int universe, std::uint64_t seed) : universe_(universe), rng_state_(seed) { resample(); }

std::uint64_t SubsetStore::signature(const VertexSet& x) const {
  std::uint64_t sig = 0;
  for (std::size_t i = 0; i < sample_.size(); ++i)
    if (x.test(sample_[i])) sig |= std::uint64_t{1} << i;
  return sig;
}

void SubsetStore::resample() {
  const double entries = std::max<double>(2.0, static_cast<double>(items_.size()));
  int want = static_cast<int>(std::ceil(2.0 * std::log2(entries)));
  want = std::min({want, universe_, 64});
  std::vector<int> pool(static_cast<std::size_t>(universe_));
  for (int v = 0; v < universe_; ++v) pool[v] = v;
  sample_.clear();
  for (int i = 0; i < want; ++i) {
    std::size_t j = static_cast<std::size_t>(i) + splitmix(rng_state_) % (pool.size() - static_cast<std::size_t>(i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    sample_.push_back(pool[static_cast<std::size_t>(i)]);
  }
  rebuild();
}

void SubsetStore::rebuild() {
  buckets_.clear();
  for (std::size_t i = 0; i < items_.size(); ++i) buckets_[signature(items_[i].set)].push_back(i);
  rebuilt_at_ = std::max<std::size_t>(1, items_.size());
}

void SubsetStore::set_sample(const std::vector<int>& sample) {
  if (sample.size() > 64) throw std::invalid_argument("subset store sample wider than 64");
  sample_ = sample;
  fixed_sample_ = true;
  rebuild();
}

void SubsetStore::insert(const VertexSet& x, int lower) {
  if (lower <= 1) return;
  if (auto it = index_.find(x); it != index_.end()) {
    auto& item = items_[it->second];
    item.lower = std::max(item.lower, lower);
    return;
  }
  index_.emplace(x, items_.size());
  items_.push_back({x, lower});
  buckets_[signature(x)].push_back(items_.size() - 1);
  if (!fixed_sample_ && items_.size() >= 4 * rebuilt_at_) resample();
}

int SubsetStore::query(const VertexSet& x) const {
  int best = 1;
  auto scan = [&](const std::vector<std::size_t>& bucket) {
    for (std::size_t i : bucket) {
      const auto& item = items_[i];
      if (item.lower > best && item.set.subset_of(x)) best = item.lower;
    }
  };
  const std::uint64_t sig = signature(x);
  const int width = std::popcount(sig);
  if (width <= 20 && (std::size_t{1} << width) <= buckets_.size()) {
    for (std::uint64_t sub = sig;; sub = (sub - 1) & sig) {
      if (auto it = buckets_.find(sub); it != buckets_.end()) scan(it->second);
      if (sub == 0) break;
    }
  } else {
    for (const auto& [bsig, bucket] : buckets_)
      if ((bsig & ~sig) == 0) scan(bucket);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Lower bounds

int mmd_plus_lb(const Graph& g, const VertexSet& x) {
  if (x.empty()) return 0;
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.n()));
  for (int v : x) rows[v] = g.neighbors(v) & x;
  VertexSet alive = x;
  int best = 0;
  while (!alive.empty()) {
    int v = -1;
    int vdeg = 0;
    for (int w : alive) {
      int d = rows[w].count();
      if (v == -1 || d < vdeg) {
        v = w;
        vdeg = d;
      }
    }
    best = std::max(best, vdeg);
    alive.reset(v);
    if (vdeg == 0) continue;
    int u = -1;
    int shared = 0;
    for (int w : rows[v]) {
      int c = rows[w].intersection_count(rows[v]);
      if (u == -1 || c < shared) {
        u = w;
        shared = c;
      }
    }
    for (int w : rows[v]) {
      rows[w].reset(v);
      if (w != u) {
        rows[w].set(u);
        rows[u].set(w);
      }
    }
  }
  return best + 1;
}

int dfs_path_cycle_lb(const Graph& g, const VertexSet& x) {
  if (x.empty()) return 0;
  std::vector<int> verts = x.to_vector();
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int v : verts) deg[v] = g.neighbors(v).intersection_count(x);
  std::vector<std::vector<int>> order(static_cast<std::size_t>(n));
  for (int v : verts) {
    auto& nb = order[v];
    nb = (g.neighbors(v) & x).to_vector();
    std::stable_sort(nb.begin(), nb.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  }

  long long longest_path = 1;
  long long longest_cycle = 0;
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root : verts) {
    for (int v : verts) visited[v] = on_stack[v] = 0;
    stack.assign(1, {root, 0});
    visited[root] = on_stack[root] = 1;
    depth[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == order[v].size()) {
        on_stack[v] = 0;
        stack.pop_back();
        continue;
      }
      int w = order[v][next++];
      if (on_stack[w]) {
        long long len = depth[v] - depth[w] + 1;
        if (len >= 3) longest_cycle = std::max(longest_cycle, len);
      } else if (!visited[w]) {
        visited[w] = on_stack[w] = 1;
        depth[w] = depth[v] + 1;
        longest_path = std::max<long long>(longest_path, depth[w]);
        stack.emplace_back(w, 0);
      }
    }
  }
  int bound = std::max(1, ceil_log2(longest_path + 1));
  if (longest_cycle >= 3) bound = std::max(bound, ceil_log2(longest_cycle) + 1);
  return bound;
}

// ---------------------------------------------------------------------------
// Isomorphism table

std::uint64_t IsoKey::hash() const {
  std::uint64_t h = mix(static_cast<std::uint64_t>(vertices), static_cast<std::uint64_t>(edges));
  for (int d : degrees) h = mix(h, static_cast<std::uint64_t>(d));
  for (auto c : colors) h = mix(h, c);
  return h;
}

namespace {

/// Two rounds of colour refinement over a local adjacency (<= 64 vertices
/// when rows are single words; general sets otherwise).
std::vector<std::uint64_t> refine_colours(const std::vector<std::vector<int>>& nbrs) {
  const std::size_t s = nbrs.size();
  std::vector<std::uint64_t> colour(s);
  for (std::size_t i = 0; i < s; ++i) colour[i] = nbrs[i].size();
  std::vector<std::uint64_t> next(s);
  std::vector<std::uint64_t> multiset;
  for (int round = 0; round < 2; ++round) {
    for (std::size_t i = 0; i < s; ++i) {
      multiset.clear();
      for (int j : nbrs[i]) multiset.push_back(colour[static_cast<std::size_t>(j)]);
      std::sort(multiset.begin(), multiset.end());
      std::uint64_t h = mix(0x1234567ULL, colour[i]);
      for (auto c : multiset) h = mix(h, c);
      next[i] = h;
    }
    colour.swap(next);
  }
  return colour;
}

std::vector<std::vector<int>> local_neighbours(const Graph& g, const VertexSet& x, std::vector<int>& order) {
  order = x.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> nbrs(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbors(order[i]) & x) nbrs[i].push_back(local[w]);
  return nbrs;
}

IsoKey key_from(const std::vector<std::vector<int>>& nbrs, const std::vector<std::uint64_t>& colours) {
  IsoKey key;
  key.vertices = static_cast<int>(nbrs.size());
  long long twice = 0;
  for (const auto& nb : nbrs) {
    key.degrees.push_back(static_cast<int>(nb.size()));
    twice += static_cast<long long>(nb.size());
  }
  key.edges = twice / 2;
  std::sort(key.degrees.begin(), key.degrees.end());
  key.colors = colours;
  std::sort(key.colors.begin(), key.colors.end());
  return key;
}

}  // namespace

IsoKey iso_key(const Graph& g, const VertexSet& x) {
  std::vector<int> order;
  auto nbrs = local_neighbours(g, x, order);
  return key_from(nbrs, refine_colours(nbrs));
}

IsoTable::IsoTable(const Graph& g, std::size_t step_budget) : graph_(&g), step_budget_(step_budget) {}

IsoTable::Record IsoTable::make_record(const VertexSet& x, int lower) const {
  std::vector<int> order;
  auto nbrs = local_neighbours(*graph_, x, order);
  Record rec;
  rec.colours = refine_colours(nbrs);
  rec.key = key_from(nbrs, rec.colours);
  rec.rows.assign(nbrs.size(), 0);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (int j : nbrs[i]) rec.rows[i] |= std::uint64_t{1} << j;
  rec.lower = lower;
  return rec;
}

bool IsoTable::isomorphic(const Record& a, const Record& b) const {
  if (!(a.key == b.key)) return false;
  const int s = a.key.vertices;
  if (s == 0) return true;

  // Match order: rarest colour first, then greedily the vertex with the most
  // already-ordered neighbours.
  std::unordered_map<std::uint64_t, int> freq;
  for (auto c : a.colours) ++freq[c];
  std::vector<int> order;
  std::uint64_t placed = 0;
  while (static_cast<int>(order.size()) < s) {
    int best = -1;
    int best_links = -1;
    int best_freq = 0;
    for (int i = 0; i < s; ++i) {
      if (placed >> i & 1U) continue;
      int links = std::popcount(a.rows[static_cast<std::size_t>(i)] & placed);
      int f = freq[a.colours[static_cast<std::size_t>(i)]];
      if (links > best_links || (links == best_links && f < best_freq)) {
        best = i;
        best_links = links;
        best_freq = f;
      }
    }
    order.push_back(best);
    placed |= std::uint64_t{1} << best;
  }

  std::vector<int> image(static_cast<std::size_t>(s), -1);
  std::uint64_t used = 0;
  std::size_t steps = 0;
  bool exhausted = false;

  auto consistent = [&](int depth, int target) {
    int src = order[static_cast<std::size_t>(depth)];
    if (a.colours[static_cast<std::size_t>(src)] != b.colours[static_cast<std::size_t>(target)]) return false;
    for (int d = 0; d < depth; ++d) {
      int prev = order[static_cast<std::size_t>(d)];
      bool ea = a.rows[static_cast<std::size_t>(src)] >> prev & 1U;
      bool eb = b.rows[static_cast<std::size_t>(target)] >> image[static_cast<std::size_t>(prev)] & 1U;
      if (ea != eb) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == s) return true;
    if (++steps > step_budget_) {
      exhausted = true;
      return false;
    }
    int src = order[static_cast<std::size_t>(depth)];
    for (int t = 0; t < s; ++t) {
      if (used >> t & 1U) continue;
      if (!consistent(depth, t)) continue;
      image[static_cast<std::size_t>(src)] = t;
      used |= std::uint64_t{1} << t;
      if (self(self, depth + 1)) return true;
      used &= ~(std::uint64_t{1} << t);
      image[static_cast<std::size_t>(src)] = -1;
      if (exhausted) return false;
    }
    return false;
  };
  return search(search, 0);
}

std::optional<int> IsoTable::lookup(const VertexSet& x) const {
  if (count_ == 0) return std::nullopt;
  const int s = x.count();
  if (s == 0 || s > kMaxVertices) return std::nullopt;
  Record probe = make_record(x, 0);
  auto it = table_.find(probe.key.hash());
  if (it == table_.end()) return std::nullopt;
  std::optional<int> best;
  for (const auto& rec : it->second)
    if ((!best || rec.lower > *best) && isomorphic(rec, probe)) best = rec.lower;
  return best;
}

void IsoTable::insert(const VertexSet& x, int lower) {
  const int s = x.count();
  if (s == 0 || s > kMaxVertices || lower <= 1) return;
  Record rec = make_record(x, lower);
  auto& bucket = table_[rec.key.hash()];
  for (auto& other : bucket) {
    if (isomorphic(other, rec)) {
      other.lower = std::max(other.lower, lower);
      return;
    }
  }
  bucket.push_back(std::move(rec));
  ++count_;
}

}  // namespace treedepth
