#include <doctest.h>

#include <random>

#include "graphs.hpp"
#include "oracle.hpp"
#include "treedepth/preprocess.hpp"
#include "treedepth/solver.hpp"
#include "treedepth/upper_bound.hpp"

using namespace treedepth;
using namespace fixtures;

namespace {

TreedepthDecomposition optimal(const Graph& g) {
  SolverOptions opt;
  opt.preprocess = false;
  return solve(g, opt).decomposition;
}

void check_lift(const Graph& original, const Reduction& red) {
  const int td = oracle::treedepth(original);
  CHECK(oracle::treedepth(red.graph) == td);
  TreedepthDecomposition lifted = lift_decomposition(red.trace, optimal(red.graph));
  CHECK(verify(original, lifted));
  CHECK(lifted.depth == td);
}

Graph triangle_with_tail() { return make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("rank set order compares the largest differing rank") {
  RankSet a({1, 3});
  RankSet b({2, 3});
  RankSet c({4});
  CHECK(a < b);
  CHECK(b < c);
  CHECK_FALSE(c < a);
  CHECK_FALSE(a < a);
  CHECK(RankSet() < RankSet({1}));
  CHECK(RankSet({1, 2}) < RankSet({3}));
  CHECK(a.without(3) == RankSet({1}));
  CHECK(a.sum() == 4);
}

TEST_CASE("critical lists of small trees") {
  CHECK(schaffer_ranking(Graph(1), 0).visible == RankSet({1}));
  Graph k2 = path(2);
  for (int root : {0, 1}) {
    TreeRanking r = schaffer_ranking(k2, root);
    CHECK(r.visible == RankSet({2}));
    CHECK(r.rank[root] == 2);
  }
  Graph p3 = path(3);
  TreeRanking r = schaffer_ranking(p3, 0);
  CHECK(r.visible == RankSet({1, 2}));
  CHECK(r.rank == std::vector<int>{1, 2, 1});
  CHECK_THROWS_AS(schaffer_ranking(cycle(4), 0), std::invalid_argument);
}

TEST_CASE("ranking within an allowed rank set") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    Graph tree = oracle::random_tree(1 + static_cast<int>(rng() % 12), rng);
    const int root = static_cast<int>(rng() % tree.n());
    TreeRanking best = schaffer_ranking(tree, root);
    std::vector<int> extra = best.visible.ranks();
    extra.push_back(best.visible.max() + 1 + static_cast<int>(rng() % 3));
    for (const RankSet& allowed : {best.visible, RankSet(extra)}) {
      std::vector<int> rank = ranking_within(tree, root, allowed);
      CHECK(is_valid_ranking(tree, rank));
      RankSet seen = visible_ranks(tree, rank, root);
      for (int r : seen.ranks()) CHECK(allowed.contains(r));
    }
  }
}

TEST_CASE("tree elimination examples") {
  Graph g = triangle_with_tail();
  Reduction red = tree_eliminate(g);
  CHECK(red.graph.n() <= g.n());
  CHECK(oracle::treedepth(red.graph) == 3);
  check_lift(g, red);

  Graph long_tail = make(10, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
  Reduction shrunk = tree_eliminate(long_tail);
  CHECK(shrunk.graph.n() < long_tail.n());
  check_lift(long_tail, shrunk);

  Graph p7 = path(7);
  Reduction tree = tree_eliminate(p7);
  CHECK(oracle::treedepth(tree.graph) == 3);
  check_lift(p7, tree);

  Graph c5 = cycle(5);
  Reduction none = tree_eliminate(c5);
  CHECK(none.trace.empty());
  CHECK(none.graph.edges() == c5.edges());
}

TEST_CASE("gadget size is the rank sum") {
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int round = 0; round < 200; ++round) {
    Graph core = oracle::random_graph(4, 0.7, rng);
    const int n = 4 + 2 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (auto [u, v] : core.edges()) g.add_edge(u, v);
    for (int v = 4; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
    Reduction red = tree_eliminate(g);
    for (const auto& step : red.trace.steps) {
      const auto* t = std::get_if<TreeEliminationStep>(&step);
      if (!t) continue;
      ++seen;
      CHECK(t->gadget.n() == t->ranks.sum());
      CHECK(static_cast<int>(t->gadget_vertices.size()) == t->ranks.sum());
      const int td_tree = oracle::treedepth(t->tree);
      CHECK(t->ranks.sum() <= td_tree * td_tree + td_tree);
      CHECK(t->ranks.sum() < static_cast<int>(t->tree_vertices.size()));
    }
    check_lift(g, red);
  }
  CHECK(seen > 0);
}

TEST_CASE("simplicial rule") {
  Graph k6 = clique(6);
  Reduction same = simplicial_rule(k6);
  CHECK(oracle::treedepth(same.graph) == 6);
  check_lift(k6, same);

  Graph c6 = cycle(6);
  CHECK(simplicial_rule(c6).trace.empty());

  // two leaves on a common neighbour: one is redundant
  Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 1}, {5, 1}});
  Reduction red = simplicial_rule(g);
  CHECK(red.graph.n() < g.n());
  check_lift(g, red);
}

TEST_CASE("minimum vertex cuts") {
  Graph c4 = cycle(4);
  CHECK(min_vertex_cut(c4, 0, 2, 10) == 2);
  Graph k23 = make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(min_vertex_cut(k23, 0, 1, 10) == 3);
  CHECK(min_vertex_cut(k23, 0, 1, 2) == 2);
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK(min_vertex_cut(split, 0, 3, 5) == 0);
  CHECK_THROWS(min_vertex_cut(c4, 0, 1, 3));
}

TEST_CASE("shared neighbourhood rule examples") {
  Graph c4 = cycle(4);
  CHECK(shared_neighborhood_rule(c4, 3).graph.edge_count() == c4.edge_count());
  Graph k23 = make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  Reduction red = shared_neighborhood_rule(k23, 3);
  CHECK(red.graph.adjacent(0, 1));
  CHECK(oracle::treedepth(red.graph) == 3);
  check_lift(k23, red);
  Graph p3 = path(3);
  CHECK(shared_neighborhood_rule(p3, 2).graph.edge_count() == 2);
}

TEST_CASE("identity trace leaves a decomposition unchanged") {
  Graph p4 = path(4);
  TreedepthDecomposition dec{{1, kRoot, 1, 2}, 3};
  TreedepthDecomposition same = lift_decomposition(ReductionTrace{4, {}}, dec);
  CHECK(same.parent == dec.parent);
  CHECK(same.depth == 3);
}

TEST_CASE("random graphs: every rule and the fixed point preserve treedepth") {
  std::mt19937_64 rng(2024);
  const double ps[] = {0.2, 0.4, 0.6};
  for (int round = 0; round < 200; ++round) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), ps[round % 3], rng);
    const int ub = compute_upper_bound(g).depth;
    check_lift(g, tree_eliminate(g));
    check_lift(g, simplicial_rule(g));
    check_lift(g, shared_neighborhood_rule(g, ub));
    check_lift(g, preprocess(g, [](const Graph& h) { return compute_upper_bound(h).depth; }));
  }
}
