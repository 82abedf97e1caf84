#include <doctest.h>

#include <random>

#include "graphs.hpp"
#include "oracle.hpp"
#include "treedepth/bounds.hpp"

using namespace treedepth;
using namespace fixtures;

TEST_CASE("memo table tightens and rejects crossed bounds") {
  MemoTable memo;
  VertexSet x = VertexSet::of(8, {1, 2, 5});
  CHECK(memo.get(x) == nullptr);
  memo.put({x, 2, 4, std::nullopt});
  memo.put({x, 3, 4, std::nullopt});
  const BoundEntry* e = memo.get(x);
  REQUIRE(e != nullptr);
  CHECK(e->lower == 3);
  CHECK(e->upper == 4);
  memo.put({x, 1, 3, std::nullopt});
  CHECK(memo.get(x)->lower == 3);
  CHECK(memo.get(x)->upper == 3);
  VertexSet y = VertexSet::of(8, {0, 7});
  memo.put({y, 2, 3, std::nullopt});
  CHECK_THROWS_AS(memo.put({y, 4, 3, std::nullopt}), std::logic_error);
}

TEST_CASE("memo table survives growth") {
  MemoTable memo;
  std::vector<VertexSet> keys;
  for (int i = 0; i < 5000; ++i) {
    VertexSet k(40);
    for (int b = 0; b < 13; ++b)
      if (i >> b & 1) k.set(b * 3);
    k.set(39);
    keys.push_back(k);
    memo.put({k, 1 + i % 5, 40, std::nullopt});
  }
  CHECK(memo.size() == 5000);
  for (int i = 0; i < 5000; ++i) CHECK(memo.get(keys[i])->lower == 1 + i % 5);
}

TEST_CASE("subset store examples") {
  SubsetStore store(6);
  CHECK(store.query(VertexSet::of(6, {0, 1, 2})) == 1);
  store.insert(VertexSet::of(6, {0, 1}), 2);
  CHECK(store.query(VertexSet::of(6, {0, 1, 2})) == 2);
  SubsetStore other(6);
  other.insert(VertexSet::of(6, {0, 3}), 3);
  CHECK(other.query(VertexSet::of(6, {0, 1, 2})) == 1);
}

TEST_CASE("subset store finds every stored subset under a narrow sample") {
  std::mt19937_64 rng(9);
  for (int width : {0, 1, 3, 6}) {
    SubsetStore store(24);
    std::vector<int> sample;
    for (int i = 0; i < width; ++i) sample.push_back(i * 4);
    store.set_sample(sample);
    std::vector<std::pair<VertexSet, int>> stored;
    for (int i = 0; i < 300; ++i) {
      VertexSet x(24);
      for (int v = 0; v < 24; ++v)
        if (rng() % 4 == 0) x.set(v);
      int lower = 2 + static_cast<int>(rng() % 6);
      store.insert(x, lower);
      stored.emplace_back(x, lower);
    }
    for (int q = 0; q < 300; ++q) {
      VertexSet x(24);
      for (int v = 0; v < 24; ++v)
        if (rng() % 3 != 0) x.set(v);
      int expected = 1;
      for (const auto& [s, l] : stored)
        if (s.subset_of(x)) expected = std::max(expected, l);
      CHECK(store.query(x) == expected);
    }
  }
}

TEST_CASE("mmd+ examples") {
  Graph k4 = clique(4);
  CHECK(mmd_plus_lb(k4, k4.all()) == 4);
  Graph p6 = path(6);
  CHECK(mmd_plus_lb(p6, p6.all()) == 2);
  Graph e = Graph(5);
  CHECK(mmd_plus_lb(e, e.all()) == 1);
}

TEST_CASE("path and cycle bound examples") {
  Graph p8 = path(8);
  CHECK(dfs_path_cycle_lb(p8, p8.all()) == 4);
  Graph c4 = cycle(4);
  CHECK(dfs_path_cycle_lb(c4, c4.all()) == 3);
  Graph k2 = clique(2);
  CHECK(dfs_path_cycle_lb(k2, k2.all()) == 2);
}

TEST_CASE("isomorphism table transfers between copies only") {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  IsoTable iso(g);
  VertexSet first = set(g, {0, 1, 2, 3, 4});
  VertexSet second = set(g, {5, 6, 7, 8, 9});
  CHECK_FALSE(iso.lookup(second).has_value());
  iso.insert(first, 4);
  REQUIRE(iso.lookup(second).has_value());
  CHECK(*iso.lookup(second) == 4);

  Graph h(8);
  for (int i = 0; i < 3; ++i) h.add_edge(i, i + 1);
  for (int i = 5; i < 8; ++i) h.add_edge(4, i);
  IsoTable paths(h);
  paths.insert(set(h, {0, 1, 2, 3}), 3);
  CHECK_FALSE(paths.lookup(set(h, {4, 5, 6, 7})).has_value());
  CHECK(iso_key(h, set(h, {0, 1, 2, 3})) == iso_key(path(4), path(4).all()));
}

TEST_CASE("random graphs: lower bounds never exceed treedepth") {
  std::mt19937_64 rng(77);
  const double ps[] = {0.2, 0.4, 0.6};
  for (int round = 0; round < 200; ++round) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), ps[round % 3], rng);
    int td = oracle::treedepth(g);
    CHECK(mmd_plus_lb(g, g.all()) <= td);
    CHECK(dfs_path_cycle_lb(g, g.all()) <= td);
    IsoTable iso(g);
    iso.insert(g.all(), td);
    CHECK(iso.lookup(g.all()).value_or(1) == td);
  }
}
