#include "treedepth/preprocess.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>

namespace treedepth {

// ---------------------------------------------------------------------------
// RankSet

RankSet::RankSet(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  std::sort(ranks_.begin(), ranks_.end());
  ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
  if (!ranks_.empty() && ranks_.front() < 1) throw std::invalid_argument("ranks must be positive");
}

int RankSet::sum() const { return std::accumulate(ranks_.begin(), ranks_.end(), 0); }

bool RankSet::contains(int r) const { return std::binary_search(ranks_.begin(), ranks_.end(), r); }

RankSet RankSet::without(int r) const {
  RankSet out;
  for (int x : ranks_)
    if (x != r) out.ranks_.push_back(x);
  return out;
}

bool operator<(const RankSet& a, const RankSet& b) {
  auto i = a.ranks_.rbegin();
  auto j = b.ranks_.rbegin();
  while (i != a.ranks_.rend() && j != b.ranks_.rend()) {
    if (*i == *j) {
      ++i;
      ++j;
      continue;
    }
    return *i < *j;
  }
  return i == a.ranks_.rend() && j != b.ranks_.rend();
}

RankSet visible_ranks(const Graph& g, const std::vector<int>& rank, int v) {
  std::vector<int> levels;
  for (int u = 0; u < g.n(); ++u)
    if (rank[u] >= rank[v]) levels.push_back(rank[u]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<int> seen;
  for (int r : levels) {
    VertexSet low(g.n());
    for (int u = 0; u < g.n(); ++u)
      if (rank[u] <= r) low.set(u);
    for (int u : component_of(g, low, v))
      if (rank[u] == r) {
        seen.push_back(r);
        break;
      }
  }
  return RankSet(std::move(seen));
}

// ---------------------------------------------------------------------------
// Optimal tree rankings

namespace {

using RankMask = std::uint64_t;

RankMask rank_bit(int r) {
  if (r < 1 || r > 64) throw std::overflow_error("tree rank exceeds 64");
  return RankMask{1} << (r - 1);
}

RankSet rankset_from_mask(RankMask m) {
  std::vector<int> ranks;
  while (m) {
    ranks.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return RankSet(std::move(ranks));
}

bool is_tree(const Graph& g) {
  return g.n() > 0 && g.edge_count() == g.n() - 1 && is_connected(g, g.all());
}

}  // namespace

TreeRanking schaffer_ranking(const Graph& tree, int root) {
  if (!is_tree(tree)) throw std::invalid_argument("schaffer_ranking: input is not a tree");
  const int n = tree.n();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : tree.neighbors(v))
      if (parent[w] == -1) {
        parent[w] = v;
        stack.push_back(w);
      }
  }

  std::vector<RankMask> visible(static_cast<std::size_t>(n), 0);
  std::vector<RankMask> child_union(static_cast<std::size_t>(n), 0);
  std::vector<RankMask> child_dup(static_cast<std::size_t>(n), 0);
  TreeRanking out;
  out.rank.assign(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    RankMask uni = child_union[v];
    RankMask dup = child_dup[v];
    int r = dup ? static_cast<int>(std::bit_width(dup)) + 1 : 1;
    while (uni & rank_bit(r)) ++r;
    out.rank[v] = r;
    RankMask below_or_equal = r >= 64 ? ~RankMask{0} : (RankMask{1} << r) - 1;
    visible[v] = (uni & ~below_or_equal) | rank_bit(r);
    if (v != root) {
      int p = parent[v];
      child_dup[p] |= child_union[p] & visible[v];
      child_union[p] |= visible[v];
    }
  }
  out.visible = rankset_from_mask(visible[root]);
  return out;
}

std::vector<int> ranking_within(const Graph& tree, int root, const RankSet& allowed) {
  TreeRanking opt = schaffer_ranking(tree, root);
  if (allowed < opt.visible) throw std::logic_error("ranking_within: allowed rank set is below the optimum");
  std::vector<int> rank = opt.rank;
  const int top = opt.visible.max();
  if (allowed.max() > top) {
    rank[root] = allowed.max();
    return rank;
  }
  int peak = static_cast<int>(std::find(rank.begin(), rank.end(), top) - rank.begin());
  if (peak == root) return rank;

  VertexSet rest = tree.all();
  rest.reset(peak);
  VertexSet piece = component_of(tree, rest, root);
  std::vector<int> local_to_tree;
  Graph sub = induced_subgraph(tree, piece, &local_to_tree);
  int sub_root = static_cast<int>(std::find(local_to_tree.begin(), local_to_tree.end(), root) - local_to_tree.begin());
  std::vector<int> sub_rank = ranking_within(sub, sub_root, allowed.without(top));
  for (std::size_t i = 0; i < local_to_tree.size(); ++i) rank[local_to_tree[i]] = sub_rank[i];
  return rank;
}

void ReductionTrace::append(ReductionTrace&& other) {
  for (auto& s : other.steps) steps.push_back(std::move(s));
}

// ---------------------------------------------------------------------------
// Tree elimination

namespace {

/// Peels degree-one vertices (lowest index first) and groups every peeled
/// vertex under the core vertex its peeled path ends at.
std::vector<std::vector<int>> pendant_groups(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> peeled(static_cast<std::size_t>(n), 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) queue.push(v);
  }
  while (!queue.empty()) {
    int v = queue.top();
    queue.pop();
    if (peeled[v] || deg[v] != 1) continue;
    int p = -1;
    for (int w : g.neighbors(v))
      if (!peeled[w]) {
        p = w;
        break;
      }
    peeled[v] = 1;
    parent[v] = p;
    if (--deg[p] == 1) queue.push(p);
  }
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (!peeled[v]) continue;
    int r = v;
    while (peeled[r]) r = parent[r];
    groups[r].push_back(v);
  }
  return groups;
}

std::optional<TreeEliminationStep> eliminate_one(const Graph& g) {
  auto groups = pendant_groups(g);
  for (int r = 0; r < g.n(); ++r) {
    if (groups[r].empty()) continue;
    VertexSet t = VertexSet::from_range(g.n(), groups[r]);
    t.set(r);
    const int tsize = t.count();
    std::vector<int> tree_vertices;
    Graph tree = induced_subgraph(g, t, &tree_vertices);
    int root = static_cast<int>(std::find(tree_vertices.begin(), tree_vertices.end(), r) - tree_vertices.begin());
    TreeRanking opt = schaffer_ranking(tree, root);
    if (opt.visible.sum() >= tsize) continue;

    TreeEliminationStep step;
    step.before = g;
    step.tree = std::move(tree);
    step.tree_vertices = std::move(tree_vertices);
    step.tree_root = root;
    step.ranks = opt.visible;

    step.old_to_new.assign(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
      if (v == r || !t.test(v)) step.old_to_new[v] = next++;

    // Gadget: path w_1..w_m, then a clique of (r_i - 1) vertices per w_i.
    const auto& ranks = step.ranks.ranks();
    const int m = static_cast<int>(ranks.size());
    const int gadget_size = step.ranks.sum();
    step.gadget = Graph(gadget_size);
    for (int i = 0; i + 1 < m; ++i) step.gadget.add_edge(i, i + 1);
    int cursor = m;
    for (int i = 0; i < m; ++i) {
      int first = cursor;
      cursor += ranks[i] - 1;
      for (int a = first; a < cursor; ++a) {
        step.gadget.add_edge(i, a);
        for (int b = a + 1; b < cursor; ++b) step.gadget.add_edge(a, b);
      }
    }
    step.gadget_vertices.resize(static_cast<std::size_t>(gadget_size));
    step.gadget_vertices[0] = step.old_to_new[r];
    for (int i = 1; i < gadget_size; ++i) step.gadget_vertices[i] = next++;
    return step;
  }
  return std::nullopt;
}

Graph build_after(const TreeEliminationStep& step) {
  const Graph& g = step.before;
  int n_new = 0;
  for (int x : step.old_to_new) n_new = std::max(n_new, x + 1);
  n_new = std::max(n_new, *std::max_element(step.gadget_vertices.begin(), step.gadget_vertices.end()) + 1);
  Graph out(n_new);
  for (auto [u, v] : g.edges())
    if (step.old_to_new[u] != -1 && step.old_to_new[v] != -1) out.add_edge(step.old_to_new[u], step.old_to_new[v]);
  for (auto [a, b] : step.gadget.edges()) out.add_edge(step.gadget_vertices[a], step.gadget_vertices[b]);
  return out;
}

}  // namespace

Reduction tree_eliminate(const Graph& g) {
  Reduction out{g, {g.n(), {}}};
  while (auto step = eliminate_one(out.graph)) {
    out.graph = build_after(*step);
    out.trace.steps.emplace_back(std::move(*step));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial rule

namespace {

std::optional<SimplicialStep> simplicial_one(const Graph& g) {
  const int n = g.n();
  std::vector<char> simplicial(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) simplicial[v] = is_clique(g, g.neighbors(v));
  for (int v = 0; v < n; ++v) {
    if (!simplicial[v]) continue;
    for (int u = 0; u < n; ++u) {
      if (u == v || !simplicial[u] || g.adjacent(u, v)) continue;
      if (!g.neighbors(v).subset_of(g.neighbors(u))) continue;
      SimplicialStep step;
      step.removed = v;
      step.dominator = u;
      step.removed_neighbors = g.neighbors(v).to_vector();
      step.dominator_neighbors = g.neighbors(u).to_vector();
      step.old_to_new.assign(static_cast<std::size_t>(n), -1);
      int next = 0;
      for (int x = 0; x < n; ++x)
        if (x != v) step.old_to_new[x] = next++;
      return step;
    }
  }
  return std::nullopt;
}

Graph remove_vertex(const Graph& g, const std::vector<int>& old_to_new) {
  Graph out(g.n() - 1);
  for (auto [u, v] : g.edges())
    if (old_to_new[u] != -1 && old_to_new[v] != -1) out.add_edge(old_to_new[u], old_to_new[v]);
  return out;
}

}  // namespace

Reduction simplicial_rule(const Graph& g) {
  Reduction out{g, {g.n(), {}}};
  while (auto step = simplicial_one(out.graph)) {
    out.graph = remove_vertex(out.graph, step->old_to_new);
    out.trace.steps.emplace_back(std::move(*step));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared neighbourhood rule

int min_vertex_cut(const Graph& g, int u, int v, int cap) {
  if (u == v || g.adjacent(u, v)) throw std::invalid_argument("min_vertex_cut needs distinct non-adjacent vertices");
  // Split network: x_in = 2x, x_out = 2x + 1.
  struct Arc {
    int to;
    int cap;
  };
  const int n = g.n();
  const int big = n + 1;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(2 * n));
  auto add = [&](int a, int b, int c) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, c});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  for (int x = 0; x < n; ++x) add(2 * x, 2 * x + 1, (x == u || x == v) ? big : 1);
  for (auto [a, b] : g.edges()) {
    add(2 * a + 1, 2 * b, big);
    add(2 * b + 1, 2 * a, big);
  }
  const int source = 2 * u + 1;
  const int sink = 2 * v;
  int flow = 0;
  std::vector<int> via(static_cast<std::size_t>(2 * n));
  while (flow < cap) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> bfs;
    bfs.push(source);
    via[source] = -2;
    while (!bfs.empty() && via[sink] == -1) {
      int x = bfs.front();
      bfs.pop();
      for (int id : out[x]) {
        const Arc& a = arcs[static_cast<std::size_t>(id)];
        if (a.cap > 0 && via[a.to] == -1) {
          via[a.to] = id;
          bfs.push(a.to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int x = sink; x != source;) {
      int id = via[x];
      arcs[static_cast<std::size_t>(id)].cap -= 1;
      arcs[static_cast<std::size_t>(id ^ 1)].cap += 1;
      x = arcs[static_cast<std::size_t>(id ^ 1)].to;
    }
    ++flow;
  }
  return flow;
}

Reduction shared_neighborhood_rule(const Graph& g, int ub) {
  Reduction out{g, {g.n(), {}}};
  Graph& h = out.graph;
  EdgeAdditionStep step;
  const long long cap = static_cast<long long>(g.n()) * g.n();
  bool changed = true;
  while (changed && static_cast<long long>(step.added.size()) < cap) {
    changed = false;
    for (int u = 0; u < h.n(); ++u) {
      if (h.degree(u) < ub) continue;
      for (int v = u + 1; v < h.n(); ++v) {
        if (h.adjacent(u, v) || h.degree(v) < ub) continue;
        bool enough = h.neighbors(u).intersection_count(h.neighbors(v)) >= ub || min_vertex_cut(h, u, v, ub) >= ub;
        if (!enough) continue;
        h.add_edge(u, v);
        step.added.emplace_back(u, v);
        changed = true;
      }
    }
  }
  if (!step.added.empty()) out.trace.steps.emplace_back(std::move(step));
  return out;
}

// ---------------------------------------------------------------------------
// Lifting

namespace {

TreedepthDecomposition lift_step(const TreeEliminationStep& step, const TreedepthDecomposition& dec) {
  std::vector<int> rank_new = ranking_from_decomposition(dec);
  std::vector<int> gadget_rank(step.gadget_vertices.size());
  for (std::size_t i = 0; i < step.gadget_vertices.size(); ++i) gadget_rank[i] = rank_new[step.gadget_vertices[i]];
  RankSet allowed = visible_ranks(step.gadget, gadget_rank, 0);
  std::vector<int> tree_rank = ranking_within(step.tree, step.tree_root, allowed);

  std::vector<int> rank(static_cast<std::size_t>(step.before.n()), 0);
  for (int x = 0; x < step.before.n(); ++x)
    if (step.old_to_new[x] != -1) rank[x] = rank_new[step.old_to_new[x]];
  for (std::size_t i = 0; i < step.tree_vertices.size(); ++i) rank[step.tree_vertices[i]] = tree_rank[i];
  return decomposition_from_ranking(step.before, rank);
}

TreedepthDecomposition lift_step(const SimplicialStep& step, const TreedepthDecomposition& dec) {
  const int n = static_cast<int>(step.old_to_new.size());
  std::vector<int> new_to_old(dec.parent.size(), -1);
  for (int x = 0; x < n; ++x)
    if (step.old_to_new[x] != -1) new_to_old[step.old_to_new[x]] = x;
  std::vector<int> parent(static_cast<std::size_t>(n), kRoot);
  for (int x = 0; x < n; ++x) {
    int y = step.old_to_new[x];
    if (y == -1) continue;
    int p = dec.parent[y];
    parent[x] = p == kRoot ? kRoot : new_to_old[p];
  }
  const int u = step.dominator;
  const int v = step.removed;
  if (step.dominator_neighbors.empty()) {
    parent[v] = kRoot;
  } else {
    // Move u below the deepest of its neighbours; they form a chain.
    for (int x = 0; x < n; ++x)
      if (parent[x] == u) parent[x] = parent[u];
    parent[u] = kRoot;
    auto level = [&](int x) {
      int l = 0;
      for (; x != kRoot; x = parent[x]) ++l;
      return l;
    };
    int deepest = step.dominator_neighbors.front();
    for (int w : step.dominator_neighbors)
      if (level(w) > level(deepest)) deepest = w;
    parent[u] = deepest;
    parent[v] = step.removed_neighbors.empty() ? kRoot : deepest;
  }
  TreedepthDecomposition out{std::move(parent), 0};
  out.depth = forest_depth(out.parent);
  return out;
}

TreedepthDecomposition lift_step(const EdgeAdditionStep&, const TreedepthDecomposition& dec) { return dec; }

}  // namespace

TreedepthDecomposition lift_decomposition(const ReductionTrace& trace, const TreedepthDecomposition& dec) {
  TreedepthDecomposition cur = dec;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
    cur = std::visit([&](const auto& step) { return lift_step(step, cur); }, *it);
  if (static_cast<int>(cur.parent.size()) != trace.original_n)
    throw std::invalid_argument("lift_decomposition: decomposition does not match the reduced graph");
  return cur;
}

Reduction preprocess(const Graph& g, const std::function<int(const Graph&)>& upper_bound,
                     const PreprocessOptions& options) {
  Reduction cur{g, {g.n(), {}}};
  auto absorb = [&](Reduction&& r) {
    if (r.trace.empty()) return false;
    cur.graph = std::move(r.graph);
    cur.trace.append(std::move(r.trace));
    return true;
  };
  while (true) {
    bool changed = false;
    if (options.tree_elimination) changed |= absorb(tree_eliminate(cur.graph));
    if (options.simplicial) changed |= absorb(simplicial_rule(cur.graph));
    if (options.shared_neighborhood && cur.graph.n() > 0)
      changed |= absorb(shared_neighborhood_rule(cur.graph, upper_bound(cur.graph)));
    if (!changed) break;
  }
  return cur;
}

}  // namespace treedepth
