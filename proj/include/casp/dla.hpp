#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "casp/graph.hpp"

namespace casp::dla {

// One learning automaton per node; actions are the node's out-edges in
// insertion order, initially equiprobable.
struct Automaton {
  int node = 0;
  std::vector<int> edge_ids;  // indexes into StochasticGraph::edges()
  std::vector<double> probs;
};

struct Config {
  double reward_rate = 0.05;        // a in (0, 1)
  double penalty_rate = 0.0;        // b in [0, 1); 0 gives reward-inaction
  int max_episodes = 20000;
  double visit_cap_multiplier = 1.0;  // walk cap = multiplier * node count
  double stop_prob_threshold = 0.9;
  bool threshold_all_episodes = false;  // mean over all episodes, not just reached
};

enum class Outcome { Reached, DeadEnd, CapExceeded };

struct EpisodeRecord {
  std::vector<int> path;                       // visited nodes, source first
  std::vector<std::pair<int, int>> choices;    // (node, action index) in walk order
  double sampled_length = 0.0;
  Outcome outcome = Outcome::DeadEnd;
};

std::vector<Automaton> make_automata(const StochasticGraph& g);

// One episode walk: actions sampled by probability, edge lengths by their
// distributions. Halts on the destination, a dead end, or the visit cap.
EpisodeRecord run_episode(const StochasticGraph& g, const std::vector<Automaton>& automata,
                          int s, int t, const Config& config, std::mt19937_64& rng);

// Running mean of reached-episode lengths; +inf while empty so the first
// completed episode is always rewarded.
class DynamicThreshold {
 public:
  explicit DynamicThreshold(bool include_all = false) : include_all_(include_all) {}
  double value() const;
  void record(double sampled_length, Outcome outcome);

 private:
  bool include_all_;
  double sum_ = 0.0;
  int count_ = 0;
};

enum class Signal { Reward, Penalty };

// Linear reward-penalty update applied to every recorded choice in order.
void update_automata(std::vector<Automaton>& automata,
                     const std::vector<std::pair<int, int>>& choices, Signal signal,
                     const Config& config);

// Greedy most-probable walk from s; empty when it dead-ends or cycles
// before reaching t. prob_product receives the product of chosen action
// probabilities when non-null.
std::vector<int> most_probable_path(const StochasticGraph& g,
                                    const std::vector<Automaton>& automata, int s, int t,
                                    double* prob_product = nullptr);

struct TraceRow {
  int episode = 0;
  double sampled_length = 0.0;
  double threshold = 0.0;
  double best_path_prob = 0.0;
};

struct SolveResult {
  std::optional<PathResult> path;  // cost is the exact expected length
  std::vector<Automaton> automata;
  int episodes = 0;
  double best_path_prob = 0.0;
};

// Episode / threshold / update loop until the most probable path is held
// with probability >= stop_prob_threshold or max_episodes runs out.
SolveResult solve(const StochasticGraph& g, int s, int t, const Config& config,
                  std::uint64_t seed, std::vector<TraceRow>* trace = nullptr);

}  // namespace casp::dla
