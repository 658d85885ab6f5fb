#include "casp/oracle.hpp"

#include <algorithm>
#include <queue>

#include "casp/errors.hpp"

namespace casp::oracle {

DistanceTable dijkstra(const Graph& g, int source) {
  const int n = g.node_count();
  DistanceTable table{std::vector<double>(n, kInf), std::vector<int>(n, -1)};
  table.dist[source] = 0.0;

  using Item = std::pair<double, int>;  // (dist, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  queue.push({0.0, source});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > table.dist[u]) continue;
    for (int id : g.out_edges(u)) {
      const Edge& e = g.edges()[id];
      if (e.cost < 0.0) throw NegativeWeight("dijkstra requires costs >= 0");
      const double nd = d + e.cost;
      if (nd < table.dist[e.to]) {
        table.dist[e.to] = nd;
        table.pred[e.to] = u;
        queue.push({nd, e.to});
      }
    }
  }
  return table;
}

std::vector<std::vector<double>> floyd_warshall(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
  for (int i = 0; i < n; ++i) dist[i][i] = 0.0;
  for (const Edge& e : g.edges()) {
    if (e.cost < 0.0) throw NegativeWeight("floyd_warshall requires costs >= 0");
    dist[e.from][e.to] = std::min(dist[e.from][e.to], e.cost);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (dist[i][k] == kInf) continue;
      for (int j = 0; j < n; ++j)
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
    }
  return dist;
}

std::optional<LeeReferenceResult> lee_reference(const MazeGrid& maze,
                                                const std::vector<double>& weights,
                                                CellCoord start, CellCoord end) {
  const int h = maze.height();
  const int w = maze.width();
  if (start == end) throw InvalidPath("start and end must differ");
  if (maze.at(start) == CellKind::Wall || maze.at(end) == CellKind::Wall)
    throw InvalidPath("start and end must not be walls");
  // Weights below 1 would allow acw plateaus and break the descent of the
  // backtrace.
  for (const double x : weights)
    if (!(x >= 1.0)) throw InvalidPath("point weights must be >= 1 or infinite");

  auto point_weight = [&](CellCoord c) -> double {
    if (maze.at(c) == CellKind::Wall) return kInf;
    return weights[static_cast<size_t>(c.row) * w + c.col];
  };

  std::vector<double> acw(static_cast<size_t>(h) * w, kInf);
  acw[static_cast<size_t>(start.row) * w + start.col] = 0.0;
  std::vector<double> next_acw = acw;

  // Synchronous sweeps: every update reads the previous sweep only, so the
  // wavefront advances one ring per step and reach_step matches the wave
  // arrival time.
  int reach_step = 0;
  bool steady = false;
  for (int sweep = 1; !steady; ++sweep) {
    steady = true;
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        const CellCoord cell{r, c};
        if (cell == start) continue;
        double best = kInf;
        for (const auto& [d, nb] : neighbors(cell, Scheme::vonNeumann4, h, w))
          best = std::min(best, acw[static_cast<size_t>(nb.row) * w + nb.col]);
        const double next = best == kInf ? kInf : best + point_weight(cell);
        const size_t i = static_cast<size_t>(r) * w + c;
        if (next < acw[i]) {
          next_acw[i] = next;
          steady = false;
          if (cell == end && reach_step == 0) reach_step = sweep;
        } else {
          next_acw[i] = acw[i];
        }
      }
    }
    acw.swap(next_acw);
  }

  const double end_acw = acw[static_cast<size_t>(end.row) * w + end.col];
  if (end_acw == kInf) return std::nullopt;

  // Backtrace: at each step pick the neighbor with the smallest accumulated
  // weight, ties broken by canonical order.
  std::vector<CellCoord> path{end};
  CellCoord cur = end;
  const int guard = h * w + 1;
  for (int i = 0; i < guard && cur != start; ++i) {
    CellCoord best_cell = cur;
    double best = kInf;
    for (const auto& [d, nb] : neighbors(cur, Scheme::vonNeumann4, h, w)) {
      const double v = acw[static_cast<size_t>(nb.row) * w + nb.col];
      if (v < best) {
        best = v;
        best_cell = nb;
      }
    }
    if (best_cell == cur) throw CorruptPointerField("lee_reference backtrace stuck");
    cur = best_cell;
    path.push_back(cur);
  }
  if (cur != start) throw CorruptPointerField("lee_reference backtrace did not reach start");
  std::reverse(path.begin(), path.end());

  return LeeReferenceResult{path, end_acw + point_weight(start), reach_step};
}

namespace {

void enumerate_from(const std::vector<std::vector<int>>& adjacency, int cur, int t,
                    int hops_left, std::vector<int>& stack, std::vector<bool>& visited,
                    std::vector<std::vector<int>>& out) {
  if (cur == t) {
    out.push_back(stack);
    return;
  }
  if (hops_left == 0) return;
  for (int next : adjacency[cur]) {
    if (visited[next]) continue;
    visited[next] = true;
    stack.push_back(next);
    enumerate_from(adjacency, next, t, hops_left - 1, stack, visited, out);
    stack.pop_back();
    visited[next] = false;
  }
}

std::vector<std::vector<int>> enumerate_on_adjacency(
    const std::vector<std::vector<int>>& adjacency, int s, int t, int max_hops) {
  if (max_hops > 12) throw LimitExceeded("enumerate_simple_paths capped at 12 hops");
  std::vector<std::vector<int>> out;
  if (s == t) return out;  // no zero-length path emitted
  std::vector<bool> visited(adjacency.size(), false);
  visited[s] = true;
  std::vector<int> stack{s};
  enumerate_from(adjacency, s, t, max_hops, stack, visited, out);
  return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_simple_paths(const Graph& g, int s, int t,
                                                     int max_hops) {
  std::vector<std::vector<int>> adjacency(g.node_count());
  for (int u = 0; u < g.node_count(); ++u) {
    for (int id : g.out_edges(u)) {
      const int v = g.edges()[id].to;
      if (std::find(adjacency[u].begin(), adjacency[u].end(), v) == adjacency[u].end())
        adjacency[u].push_back(v);
    }
  }
  return enumerate_on_adjacency(adjacency, s, t, max_hops);
}

std::vector<std::vector<int>> enumerate_simple_paths(const StochasticGraph& g, int s,
                                                     int t, int max_hops) {
  std::vector<std::vector<int>> adjacency(g.node_count());
  for (int u = 0; u < g.node_count(); ++u)
    for (int id : g.out_edges(u)) adjacency[u].push_back(g.edges()[id].to);
  return enumerate_on_adjacency(adjacency, s, t, max_hops);
}

std::vector<int> bfs_hops(const MazeGrid& maze, CellCoord start, Scheme scheme) {
  const int h = maze.height();
  const int w = maze.width();
  std::vector<int> dist(static_cast<size_t>(h) * w, -1);
  if (maze.at(start) == CellKind::Wall) return dist;
  std::queue<CellCoord> queue;
  dist[static_cast<size_t>(start.row) * w + start.col] = 0;
  queue.push(start);
  while (!queue.empty()) {
    const CellCoord cur = queue.front();
    queue.pop();
    const int d = dist[static_cast<size_t>(cur.row) * w + cur.col];
    for (const auto& [dir, nb] : neighbors(cur, scheme, h, w)) {
      if (maze.at(nb) == CellKind::Wall) continue;
      int& slot = dist[static_cast<size_t>(nb.row) * w + nb.col];
      if (slot < 0) {
        slot = d + 1;
        queue.push(nb);
      }
    }
  }
  return dist;
}

std::optional<std::vector<CellCoord>> bfs_path(const MazeGrid& maze, CellCoord start,
                                               CellCoord end, Scheme scheme) {
  const int h = maze.height();
  const int w = maze.width();
  const std::vector<int> dist = bfs_hops(maze, start, scheme);
  if (dist[static_cast<size_t>(end.row) * w + end.col] < 0) return std::nullopt;
  std::vector<CellCoord> path{end};
  CellCoord cur = end;
  while (cur != start) {
    const int d = dist[static_cast<size_t>(cur.row) * w + cur.col];
    for (const auto& [dir, nb] : neighbors(cur, scheme, h, w)) {
      if (maze.at(nb) == CellKind::Wall) continue;
      if (dist[static_cast<size_t>(nb.row) * w + nb.col] == d - 1) {
        cur = nb;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace casp::oracle
