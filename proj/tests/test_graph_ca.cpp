#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "casp/graph_ca.hpp"
#include "casp/oracle.hpp"
#include "test_util.hpp"

using namespace casp;
using namespace casp::graphca;
using oracle::kInf;

namespace {

// Truncated-hop dynamic program: exact min cost over paths of <= hops edges.
std::vector<double> bounded_hop_costs(const Graph& g, int source, int hops) {
  std::vector<double> dist(g.node_count(), kInf);
  dist[source] = 0.0;
  for (int step = 0; step < hops; ++step) {
    std::vector<double> next = dist;
    for (const Edge& e : g.edges())
      if (dist[e.from] != kInf)
        next[e.to] = std::min(next[e.to], dist[e.from] + e.cost);
    dist = next;
  }
  return dist;
}

}  // namespace

TEST_CASE("chain relaxes one hop per step") {
  Graph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  auto states = initial_states(g, 0);

  relax_step(states, g);
  CHECK(states[1].pred == 0);
  CHECK(states[1].cost == 1.0);
  CHECK(states[2].cost == kInf);

  relax_step(states, g);
  CHECK(states[2].pred == 1);
  CHECK(states[2].cost == 2.0);
}

TEST_CASE("isolated node keeps the initial state forever") {
  Graph g(3);
  g.add_edge(0, 1, 1.0);
  auto states = initial_states(g, 0);
  for (int i = 0; i < 5; ++i) relax_step(states, g);
  CHECK(states[2].pred == -1);
  CHECK(states[2].cost == kInf);
}

TEST_CASE("node adopts the cheaper of two settled offers") {
  Graph g(4);
  g.add_edge(0, 1, 0.0);
  g.add_edge(0, 2, 0.0);
  g.add_edge(1, 3, 4.0);
  g.add_edge(2, 3, 3.0);
  auto states = initial_states(g, 0);
  relax_step(states, g);
  relax_step(states, g);
  CHECK(states[3].cost == 3.0);
  CHECK(states[3].pred == 2);
}

TEST_CASE("equal-cost predecessors resolve to the lowest node id") {
  Graph g(4);
  g.add_edge(0, 2, 1.0);
  g.add_edge(0, 1, 1.0);
  g.add_edge(2, 3, 1.0);  // inserted before the edge from node 1
  g.add_edge(1, 3, 1.0);
  const auto result = run(g, 0, 3);
  REQUIRE(result.path.has_value());
  CHECK(result.states[3].pred == 1);
}

TEST_CASE("unreachable destination reports no path") {
  Graph g(3);
  g.add_edge(0, 1, 1.0);
  const auto result = run(g, 0, 2);
  CHECK_FALSE(result.path.has_value());
  CHECK(result.states[2].cost == kInf);
}

TEST_CASE("complete unit-cost graph routes over a single edge") {
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      if (u != v) g.add_edge(u, v, 1.0);
  const auto result = run(g, 0, 5);
  REQUIRE(result.path.has_value());
  CHECK(result.path->cost == 1.0);
  CHECK(result.path->nodes == std::vector<int>{0, 5});
}

TEST_CASE("run matches dijkstra on random graphs") {
  std::mt19937_64 rng(808);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> size(2, 30);
    const int n = size(rng);
    const Graph g = testutil::random_graph(n, 0.25, 8.0, rng);
    const auto table = oracle::dijkstra(g, 0);
    const auto result = run(g, 0, n - 1);
    if (table.dist[n - 1] == kInf) {
      CHECK_FALSE(result.path.has_value());
    } else {
      REQUIRE(result.path.has_value());
      CHECK(result.path->cost == table.dist[n - 1]);
      CHECK(result.steps_to_fixed_point <= n - 1);
      // Self-consistency: the backtracked path costs what the node claims.
      double walked = 0.0;
      for (size_t j = 0; j + 1 < result.path->nodes.size(); ++j) {
        double best = kInf;
        for (int id : g.out_edges(result.path->nodes[j])) {
          const Edge& e = g.edges()[id];
          if (e.to == result.path->nodes[j + 1]) best = std::min(best, e.cost);
        }
        walked += best;
      }
      CHECK(walked == doctest::Approx(result.path->cost));
    }
  }
}

TEST_CASE("after t steps every cost is the best t-hop cost") {
  std::mt19937_64 rng(909);
  for (int i = 0; i < 20; ++i) {
    const Graph g = testutil::random_graph(12, 0.3, 5.0, rng);
    auto states = initial_states(g, 0);
    for (int t = 1; t <= 11; ++t) {
      relax_step(states, g);
      const auto want = bounded_hop_costs(g, 0, t);
      for (int v = 0; v < g.node_count(); ++v) {
        if (want[v] == kInf)
          CHECK(states[v].cost == kInf);
        else
          CHECK(states[v].cost == doctest::Approx(want[v]));
      }
    }
  }
}

TEST_CASE("per-node costs never increase") {
  std::mt19937_64 rng(111);
  const Graph g = testutil::random_graph(15, 0.3, 5.0, rng);
  auto states = initial_states(g, 0);
  for (int t = 0; t < 14; ++t) {
    const auto before = states;
    relax_step(states, g);
    for (int v = 0; v < g.node_count(); ++v)
      CHECK(states[v].cost <= before[v].cost);
  }
}
