#include "casp/graph.hpp"

#include <cmath>
#include <sstream>

#include "casp/errors.hpp"

namespace casp {

Graph::Graph(int node_count) : node_count_(node_count), out_(node_count), in_(node_count) {
  if (node_count < 0) throw ParseError("node count must be >= 0");
}

void Graph::add_edge(int from, int to, double cost) {
  if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_)
    throw ParseError("edge endpoint outside graph");
  if (!(cost >= 0.0) || !std::isfinite(cost)) throw NegativeWeight("edge cost must be finite and >= 0");
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({from, to, cost});
  out_[from].push_back(id);
  in_[to].push_back(id);
}

StochasticGraph::StochasticGraph(int node_count) : node_count_(node_count), out_(node_count) {
  if (node_count < 0) throw ParseError("node count must be >= 0");
}

void StochasticGraph::add_edge(int from, int to, std::vector<LengthAtom> dist) {
  if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_)
    throw ParseError("edge endpoint outside graph");
  if (dist.empty()) throw ParseError("empty length distribution");
  double total = 0.0;
  for (const LengthAtom& a : dist) {
    if (!(a.length >= 0.0) || !std::isfinite(a.length))
      throw ParseError("edge lengths must be finite and >= 0");
    if (a.prob < 0.0) throw ParseError("negative probability");
    total += a.prob;
  }
  if (std::abs(total - 1.0) > kProbTolerance)
    throw ParseError("distribution probabilities must sum to 1");
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({from, to, std::move(dist)});
  out_[from].push_back(id);
}

int StochasticGraph::find_edge(int from, int to) const {
  if (from < 0 || from >= node_count_) return -1;
  for (int id : out_[from])
    if (edges_[id].to == to) return id;
  return -1;
}

LatticeMetric parse_metric(const std::string& token) {
  if (token == "raw") return LatticeMetric::raw;
  if (token == "hop_delay") return LatticeMetric::hop_delay;
  throw ParseError("unknown metric: " + token);
}

const char* metric_name(LatticeMetric m) {
  return m == LatticeMetric::raw ? "raw" : "hop_delay";
}

Graph from_lattice(const WeightedLattice& lat, LatticeMetric metric) {
  Graph g(lat.cell_count());
  const double offset = metric == LatticeMetric::hop_delay ? 2.0 : 0.0;
  for (int r = 0; r < lat.height(); ++r) {
    for (int c = 0; c < lat.width(); ++c) {
      const CellCoord x{r, c};
      for (const auto& [d, y] : neighbors(x, lat.scheme(), lat.height(), lat.width())) {
        const int w = lat.weight_in(x, d);
        if (w != kNoEdge) g.add_edge(lat.index(y), lat.index(x), w + offset);
      }
    }
  }
  return g;
}

double sample_edge(const StochasticGraph& g, int from, int to, std::mt19937_64& rng) {
  const int id = g.find_edge(from, to);
  if (id < 0)
    throw MissingEdge("no edge " + std::to_string(from) + " -> " + std::to_string(to));
  const std::vector<LengthAtom>& dist = g.edges()[id].dist;
  double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  for (const LengthAtom& a : dist) {
    if (u < a.prob) return a.length;
    u -= a.prob;
  }
  return dist.back().length;  // u landed in the rounding slack
}

double expected_path_length(const StochasticGraph& g, const std::vector<int>& path) {
  if (path.size() < 2) return 0.0;
  double total = 0.0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const int id = g.find_edge(path[i], path[i + 1]);
    if (id < 0)
      throw InvalidPath("path uses missing edge " + std::to_string(path[i]) + " -> " +
                        std::to_string(path[i + 1]));
    for (const LengthAtom& a : g.edges()[id].dist) total += a.length * a.prob;
  }
  return total;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw ParseError("graph header must be the node count");
  Graph g(n);
  int from = 0, to = 0;
  double cost = 0.0;
  while (in >> from) {
    if (!(in >> to >> cost)) throw ParseError("truncated graph edge line");
    g.add_edge(from, to, cost);
  }
  return g;
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.node_count() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << ' ' << e.cost << '\n';
  return out.str();
}

StochasticGraph parse_stochastic_graph(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw ParseError("stochastic graph header must be the node count");
  StochasticGraph g(n);
  int from = 0, to = 0, k = 0;
  while (in >> from) {
    if (!(in >> to >> k) || k < 1) throw ParseError("bad stochastic edge line");
    std::vector<LengthAtom> dist(static_cast<size_t>(k));
    for (LengthAtom& a : dist)
      if (!(in >> a.length >> a.prob)) throw ParseError("truncated distribution");
    g.add_edge(from, to, std::move(dist));
  }
  return g;
}

std::string serialize(const StochasticGraph& g) {
  std::ostringstream out;
  out << g.node_count() << '\n';
  for (const StochasticEdge& e : g.edges()) {
    out << e.from << ' ' << e.to << ' ' << e.dist.size();
    for (const LengthAtom& a : e.dist) out << ' ' << a.length << ' ' << a.prob;
    out << '\n';
  }
  return out.str();
}

}  // namespace casp
