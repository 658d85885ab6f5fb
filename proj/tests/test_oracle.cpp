#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "casp/errors.hpp"
#include "casp/oracle.hpp"
#include "test_util.hpp"

using namespace casp;
using oracle::kInf;

namespace {

// Independent brute force: exact min-cost simple path by DFS with cost
// pruning (valid because costs are non-negative).
void brute_dfs(const Graph& g, int cur, int t, double cost, std::vector<bool>& used,
               double& best) {
  if (cost >= best) return;
  if (cur == t) {
    best = cost;
    return;
  }
  for (int id : g.out_edges(cur)) {
    const Edge& e = g.edges()[id];
    if (used[e.to]) continue;
    used[e.to] = true;
    brute_dfs(g, e.to, t, cost + e.cost, used, best);
    used[e.to] = false;
  }
}

double brute_min_cost(const Graph& g, int s, int t) {
  if (s == t) return 0.0;
  std::vector<bool> used(g.node_count(), false);
  used[s] = true;
  double best = kInf;
  brute_dfs(g, s, t, 0.0, used, best);
  return best;
}

}  // namespace

TEST_CASE("dijkstra trivial cases") {
  Graph single(1);
  const auto table = oracle::dijkstra(single, 0);
  REQUIRE(table.dist.size() == 1);
  CHECK(table.dist[0] == 0.0);

  Graph pair(2);
  pair.add_edge(0, 1, 5.0);
  const auto t2 = oracle::dijkstra(pair, 0);
  CHECK(t2.dist[1] == 5.0);
  CHECK(t2.pred[1] == 0);
}

TEST_CASE("dijkstra matches brute force on random graphs") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 25; ++i) {
    const Graph g = testutil::random_graph(20, 0.25, 10.0, rng);
    const auto table = oracle::dijkstra(g, 0);
    for (int t = 0; t < g.node_count(); ++t) {
      const double want = brute_min_cost(g, 0, t);
      if (want == kInf)
        CHECK(table.dist[t] == kInf);
      else
        CHECK(table.dist[t] == doctest::Approx(want));
    }
  }
}

TEST_CASE("dijkstra predecessor chain reaches the source") {
  std::mt19937_64 rng(7);
  const Graph g = testutil::random_graph(15, 0.3, 5.0, rng);
  const auto table = oracle::dijkstra(g, 3);
  for (int v = 0; v < g.node_count(); ++v) {
    if (table.dist[v] == kInf || v == 3) continue;
    int cur = v;
    int guard = 0;
    while (cur != 3) {
      cur = table.pred[cur];
      REQUIRE(cur >= 0);
      REQUIRE(++guard <= g.node_count());
    }
  }
}

TEST_CASE("dijkstra triangle inequality on edges") {
  std::mt19937_64 rng(13);
  const Graph g = testutil::random_graph(18, 0.3, 7.0, rng);
  const auto table = oracle::dijkstra(g, 0);
  for (const Edge& e : g.edges()) {
    if (table.dist[e.from] == kInf) continue;
    CHECK(table.dist[e.to] <= table.dist[e.from] + e.cost + 1e-12);
  }
}

TEST_CASE("floyd_warshall empty edge set") {
  Graph g(3);
  const auto dist = oracle::floyd_warshall(g);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(dist[i][j] == (i == j ? 0.0 : kInf));
}

TEST_CASE("floyd_warshall picks the two-hop shortcut") {
  Graph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  g.add_edge(0, 2, 3.0);
  const auto dist = oracle::floyd_warshall(g);
  CHECK(dist[0][2] == 2.0);
}

TEST_CASE("floyd_warshall rows equal dijkstra") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testutil::random_graph(12, 0.3, 6.0, rng);
    const auto fw = oracle::floyd_warshall(g);
    for (int s = 0; s < g.node_count(); ++s) {
      const auto table = oracle::dijkstra(g, s);
      for (int t = 0; t < g.node_count(); ++t) {
        if (fw[s][t] == kInf)
          CHECK(table.dist[t] == kInf);
        else
          CHECK(fw[s][t] == doctest::Approx(table.dist[t]));
      }
    }
  }
}

TEST_CASE("lee_reference uniform weights on an open grid") {
  for (const auto& [r, c] : {std::pair{3, 4}, std::pair{5, 2}, std::pair{1, 1}}) {
    const MazeGrid maze(6, 6);
    const std::vector<double> weights(36, 1.0);
    const auto result = oracle::lee_reference(maze, weights, {0, 0}, {r, c});
    REQUIRE(result.has_value());
    CHECK(result->cost == doctest::Approx(r + c + 1));
    CHECK(result->path.front() == CellCoord{0, 0});
    CHECK(result->path.back() == CellCoord{r, c});
    CHECK(static_cast<int>(result->path.size()) == r + c + 1);
  }
}

TEST_CASE("lee_reference wave reaches the end at the Manhattan-distance step") {
  // Unit weights; end at Manhattan distance 6 from the start.
  const MazeGrid maze(7, 7);
  const std::vector<double> weights(49, 1.0);
  const auto result = oracle::lee_reference(maze, weights, {0, 0}, {2, 4});
  REQUIRE(result.has_value());
  CHECK(result->reach_step == 6);
}

TEST_CASE("lee_reference walled-off end yields no path") {
  MazeGrid maze(5, 5);
  for (const auto& [r, c] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 3},
                            std::pair{3, 1}, {3, 2}, {3, 3}})
    maze.set({r, c}, CellKind::Wall);
  const std::vector<double> weights(25, 1.0);
  CHECK_FALSE(oracle::lee_reference(maze, weights, {0, 0}, {2, 2}).has_value());
}

TEST_CASE("lee_reference agrees with dijkstra on node-weight graphs") {
  std::mt19937_64 rng(31);
  int solvable = 0;
  for (int i = 0; i < 100; ++i) {
    const int h = 6, w = 7;
    const MazeGrid maze = testutil::random_maze(h, w, 0.2, {0, 0}, {h - 1, w - 1}, rng);
    std::vector<double> weights(static_cast<size_t>(h) * w);
    std::uniform_int_distribution<int> weight(1, 4);
    for (double& x : weights) x = weight(rng);

    // Node weights pushed onto incoming edges.
    Graph g(h * w);
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c) {
        if (maze.at({r, c}) == CellKind::Wall) continue;
        for (const auto& [d, nb] : neighbors({r, c}, Scheme::vonNeumann4, h, w)) {
          if (maze.at(nb) == CellKind::Wall) continue;
          g.add_edge(r * w + c, nb.row * w + nb.col, weights[nb.row * w + nb.col]);
        }
      }
    const auto table = oracle::dijkstra(g, 0);
    const auto result = oracle::lee_reference(maze, weights, {0, 0}, {h - 1, w - 1});
    const double end_dist = table.dist[h * w - 1];
    if (!result.has_value()) {
      CHECK(end_dist == kInf);
      continue;
    }
    ++solvable;
    CHECK(result->cost == doctest::Approx(end_dist + weights[0]));
    // The backtraced route must be a valid wall-free 4-neighbor path.
    for (size_t j = 0; j + 1 < result->path.size(); ++j) {
      const CellCoord a = result->path[j];
      const CellCoord b = result->path[j + 1];
      CHECK(std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1);
      CHECK(maze.at(b) != CellKind::Wall);
    }
  }
  CHECK(solvable > 50);  // the corpus must actually exercise the comparison
}

TEST_CASE("enumerate_simple_paths two parallel routes") {
  Graph g(4);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 3, 1.0);
  g.add_edge(0, 2, 1.0);
  g.add_edge(2, 3, 1.0);
  const auto paths = oracle::enumerate_simple_paths(g, 0, 3, 4);
  CHECK(paths.size() == 2);
}

TEST_CASE("enumerate_simple_paths on K4") {
  Graph g(4);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (u != v) g.add_edge(u, v, 1.0);
  const auto paths = oracle::enumerate_simple_paths(g, 0, 3, 3);
  CHECK(paths.size() == 5);
  for (const auto& p : paths) {
    CHECK(p.front() == 0);
    CHECK(p.back() == 3);
  }
}

TEST_CASE("enumerate_simple_paths with s == t is empty") {
  Graph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 0, 1.0);
  CHECK(oracle::enumerate_simple_paths(g, 0, 0, 4).empty());
}

TEST_CASE("enumerate_simple_paths guards the hop budget") {
  Graph g(2);
  g.add_edge(0, 1, 1.0);
  CHECK_THROWS_AS(oracle::enumerate_simple_paths(g, 0, 1, 13), LimitExceeded);
}

TEST_CASE("bfs_hops and bfs_path on a small maze") {
  const MazeGrid maze = parse_maze(
      "S..\n"
      "##.\n"
      "E..\n");
  const auto hops = oracle::bfs_hops(maze, {0, 0}, Scheme::vonNeumann4);
  CHECK(hops[2 * 3 + 0] == 6);  // down the right side and back
  const auto path = oracle::bfs_path(maze, {0, 0}, {2, 0}, Scheme::vonNeumann4);
  REQUIRE(path.has_value());
  CHECK(path->size() == 7);
  CHECK(path->front() == CellCoord{0, 0});
  CHECK(path->back() == CellCoord{2, 0});
}

TEST_CASE("lee_reference rejects sub-unit point weights") {
  const MazeGrid maze(3, 3);
  std::vector<double> weights(9, 1.0);
  weights[4] = 0.5;
  CHECK_THROWS_AS(oracle::lee_reference(maze, weights, {0, 0}, {2, 2}), InvalidPath);
}
