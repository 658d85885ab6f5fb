#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "casp/graph.hpp"

namespace casp::graphca {

struct NodeState {
  int pred = -1;
  double cost = std::numeric_limits<double>::infinity();
};

std::vector<NodeState> initial_states(const Graph& g, int source);

// One synchronous relaxation: every node adopts the cheapest offer
// cost(k) + C(k, i) over in-neighbors k, from the pre-step snapshot,
// recording k (lowest id on ties). Costs never increase. Returns whether
// anything changed.
bool relax_step(std::vector<NodeState>& states, const Graph& g);

struct RunResult {
  std::optional<PathResult> path;  // nullopt when t is unreachable (cost inf)
  std::vector<NodeState> states;
  int steps_to_fixed_point = 0;
};

using StepHook = std::function<void(int step, const std::vector<NodeState>&)>;

// Relaxes to the fixed point (at most n-1 changing steps for non-negative
// costs) and backtracks the predecessor chain from t.
RunResult run(const Graph& g, int s, int t, const StepHook& hook = {});

}  // namespace casp::graphca
