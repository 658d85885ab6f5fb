#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "casp/graph.hpp"
#include "casp/grid.hpp"

namespace casp::oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct DistanceTable {
  std::vector<double> dist;  // kInf when unreachable
  std::vector<int> pred;     // -1 when none
};

DistanceTable dijkstra(const Graph& g, int source);

// Entry (i, j) is the minimal path cost i -> j; 0 on the diagonal.
std::vector<std::vector<double>> floyd_warshall(const Graph& g);

struct LeeReferenceResult {
  std::vector<CellCoord> path;  // start first, end last
  double cost = 0.0;            // sum of point weights over the whole path
  int reach_step = 0;           // relaxation sweep at which end first got finite
};

// Accumulated-weight relaxation on the 4-neighbor grid: acw(i) settles to
// min over neighbors acw(j) + weight(i), acw(start) = 0, then the path is
// walked back from end along minimal acw (canonical tie-break). Weights are
// per grid point, >= 1 or kInf; wall cells act as infinite weight.
std::optional<LeeReferenceResult> lee_reference(const MazeGrid& maze,
                                                const std::vector<double>& weights,
                                                CellCoord start, CellCoord end);

// All simple s -> t paths of at most max_hops edges. max_hops above 12
// throws LimitExceeded. s == t yields no paths.
std::vector<std::vector<int>> enumerate_simple_paths(const Graph& g, int s, int t,
                                                     int max_hops);
std::vector<std::vector<int>> enumerate_simple_paths(const StochasticGraph& g, int s,
                                                     int t, int max_hops);

// 4- or 8-connected hop distances from start over non-Wall cells; -1 when
// unreachable. Used as the unit-weight grid oracle.
std::vector<int> bfs_hops(const MazeGrid& maze, CellCoord start, Scheme scheme);

// Shortest non-Wall cell path start..end under the scheme, or nullopt.
std::optional<std::vector<CellCoord>> bfs_path(const MazeGrid& maze, CellCoord start,
                                               CellCoord end, Scheme scheme);

}  // namespace casp::oracle
