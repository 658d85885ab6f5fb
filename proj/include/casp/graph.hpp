#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "casp/grid.hpp"

namespace casp {

struct Edge {
  int from = 0;
  int to = 0;
  double cost = 0.0;
};

// Directed graph with non-negative finite edge costs. Absent edges are
// implicitly infinite.
class Graph {
 public:
  explicit Graph(int node_count);

  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(int from, int to, double cost);

  // Edge indexes grouped by endpoint, in insertion order.
  const std::vector<int>& out_edges(int node) const { return out_[node]; }
  const std::vector<int>& in_edges(int node) const { return in_[node]; }

 private:
  int node_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// One atom of a discrete edge-length distribution.
struct LengthAtom {
  double length = 0.0;
  double prob = 0.0;
};

struct StochasticEdge {
  int from = 0;
  int to = 0;
  std::vector<LengthAtom> dist;
};

// Directed graph whose edge lengths are finite discrete distributions.
// Probabilities of each edge must sum to 1 within kProbTolerance.
class StochasticGraph {
 public:
  static constexpr double kProbTolerance = 1e-9;

  explicit StochasticGraph(int node_count);

  int node_count() const { return node_count_; }
  const std::vector<StochasticEdge>& edges() const { return edges_; }

  void add_edge(int from, int to, std::vector<LengthAtom> dist);

  const std::vector<int>& out_edges(int node) const { return out_[node]; }
  // Index into edges() or -1.
  int find_edge(int from, int to) const;

 private:
  int node_count_;
  std::vector<StochasticEdge> edges_;
  std::vector<std::vector<int>> out_;
};

struct PathResult {
  std::vector<int> nodes;  // source first, destination last
  double cost = 0.0;
};

enum class LatticeMetric { raw, hop_delay };

LatticeMetric parse_metric(const std::string& token);
const char* metric_name(LatticeMetric m);

// One node per lattice cell (node id = row*width + col); an edge y -> x of
// cost w for every finite incoming weight w stored at x for the direction
// of y. hop_delay adds the 2-step per-hop latency of the excitation wave,
// giving cost w + 2.
Graph from_lattice(const WeightedLattice& lat, LatticeMetric metric);

// Draws a length from the edge's distribution. Deterministic in rng state.
double sample_edge(const StochasticGraph& g, int from, int to, std::mt19937_64& rng);

// Exact expectation of the path's total length (sum of per-edge means).
double expected_path_length(const StochasticGraph& g, const std::vector<int>& path);

// Text formats. Graph: header "N", then lines "from to cost".
// Stochastic: header "N", then lines "from to k l1 p1 ... lk pk".
Graph parse_graph(const std::string& text);
std::string serialize(const Graph& g);
StochasticGraph parse_stochastic_graph(const std::string& text);
std::string serialize(const StochasticGraph& g);

}  // namespace casp
