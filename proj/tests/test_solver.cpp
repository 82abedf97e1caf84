#include <doctest.h>

#include <random>

#include "graphs.hpp"
#include "oracle.hpp"
#include "treedepth/solver.hpp"

using namespace treedepth;
using namespace fixtures;

namespace {

int depth_of(const Graph& g, const PartialDecomposition& part, const VertexSet& x) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()), kRoot);
  VertexSet covered(g.n());
  for (auto [v, p] : part.links) {
    parent[v] = p;
    covered.set(v);
  }
  REQUIRE(covered == x);
  Graph sub(g.n());
  for (auto [u, v] : g.edges())
    if (x.test(u) && x.test(v)) sub.add_edge(u, v);
  TreedepthDecomposition full{parent, part.depth};
  REQUIRE(verify(sub, full));
  return part.depth;
}

}  // namespace

TEST_CASE("vertex cover special case") {
  Graph s4 = star(4);
  Solver a(s4);
  auto d = a.special_case_k1(s4.all(), 2);
  REQUIRE(d.has_value());
  CHECK(depth_of(s4, *d, s4.all()) == 2);

  Graph p4 = path(4);
  Solver b(p4);
  CHECK_FALSE(b.special_case_k1(p4.all(), 2).has_value());

  Graph c4 = cycle(4);
  Solver c(c4);
  auto e = c.special_case_k1(c4.all(), 3);
  REQUIRE(e.has_value());
  CHECK(depth_of(c4, *e, c4.all()) == 3);
}

TEST_CASE("star components special case") {
  Graph p4 = path(4);
  Solver a(p4);
  auto d = a.special_case_k2(p4.all(), 3);
  REQUIRE(d.has_value());
  CHECK(depth_of(p4, *d, p4.all()) <= 3);

  Graph p8 = path(8);
  Solver b(p8);
  CHECK_FALSE(b.special_case_k2(p8.all(), 3).has_value());

  Graph bowtie = make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  Solver c(bowtie);
  auto e = c.special_case_k2(bowtie.all(), 3);
  REQUIRE(e.has_value());
  CHECK(depth_of(bowtie, *e, bowtie.all()) == 3);
}

TEST_CASE("decision examples") {
  Graph p4 = path(4);
  CHECK(decide(p4, p4.all(), 3, EnumerationMode::Exact).outcome == Outcome::Yes);
  CHECK(decide(p4, p4.all(), 2, EnumerationMode::Exact).outcome == Outcome::No);
  Graph k4 = clique(4);
  CHECK(decide(k4, k4.all(), 3, EnumerationMode::Exact).outcome == Outcome::No);
  CHECK(decide(k4, k4.all(), 4, EnumerationMode::Exact).outcome == Outcome::Yes);
  Graph c8 = cycle(8);
  auto yes = decide(c8, c8.all(), 4, EnumerationMode::Exact);
  REQUIRE(yes.outcome == Outcome::Yes);
  CHECK(depth_of(c8, *yes.decomposition, c8.all()) <= 4);
  CHECK(decide(c8, c8.all(), 3, EnumerationMode::Exact).outcome == Outcome::No);
}

TEST_CASE("a tiny budget yields unknown, never a wrong answer") {
  std::mt19937_64 rng(8);
  Graph g = oracle::random_graph(14, 0.35, rng);
  const int td = oracle::treedepth(g);
  SolverOptions opt;
  opt.separator_budget = 1;
  Solver s(g, opt);
  auto r = s.decide(g.all(), td - 1, EnumerationMode::Exact);
  CHECK(r.outcome != Outcome::Yes);
  SolveResult res = solve(g, opt);
  CHECK(verify(g, res.decomposition));
  CHECK(res.treedepth >= td);
  CHECK(res.lower_bound <= td);
  if (res.treedepth > td) CHECK_FALSE(res.optimal);
}

TEST_CASE("solve examples") {
  Graph p15 = path(15);
  SolveResult r = solve(p15);
  CHECK(r.treedepth == 4);
  CHECK(verify(p15, r.decomposition));
  CHECK(solve(clique(5)).treedepth == 5);
  SolveResult e = solve(Graph(7));
  CHECK(e.treedepth == 1);
  for (int p : e.decomposition.parent) CHECK(p == kRoot);
  CHECK(solve(Graph(0)).treedepth == 0);
}

TEST_CASE("random graphs: decisions are sound and monotone") {
  std::mt19937_64 rng(99);
  const double ps[] = {0.2, 0.4, 0.6};
  for (int round = 0; round < 150; ++round) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), ps[round % 3], rng);
    const int td = oracle::treedepth(g);
    Solver solver(g);
    bool yes_before = false;
    for (int k = 1; k <= g.n(); ++k) {
      auto exact = solver.decide(g.all(), k, EnumerationMode::Exact);
      CHECK((exact.outcome == Outcome::Yes) == (td <= k));
      if (yes_before) CHECK(exact.outcome == Outcome::Yes);
      if (exact.outcome == Outcome::Yes) {
        yes_before = true;
        CHECK(depth_of(g, *exact.decomposition, g.all()) <= k);
      }
      auto heuristic = solver.decide(g.all(), k, EnumerationMode::Heuristic);
      if (heuristic.outcome == Outcome::Yes) CHECK(depth_of(g, *heuristic.decomposition, g.all()) <= k);
      CHECK_FALSE((heuristic.outcome == Outcome::Yes && td > k));
    }
    // every stored bound is consistent with the oracle
    for (const auto& entry : solver.memo().entries()) {
      const int t = oracle::treedepth(g, entry.key);
      CHECK(entry.lower <= t);
      CHECK(t <= entry.upper);
      if (entry.witness) CHECK(depth_of(g, *entry.witness, entry.key) == entry.upper);
    }
  }
}

TEST_CASE("random graphs: solve matches the oracle") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 150; ++round) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 14), 0.15 + 0.1 * (round % 6), rng);
    SolveResult r = solve(g);
    CHECK(r.treedepth == oracle::treedepth(g));
    CHECK(r.optimal);
    CHECK(verify(g, r.decomposition));
  }
}
