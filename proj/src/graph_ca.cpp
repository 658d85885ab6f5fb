#include "casp/graph_ca.hpp"

#include <algorithm>

#include "casp/errors.hpp"

namespace casp::graphca {

std::vector<NodeState> initial_states(const Graph& g, int source) {
  std::vector<NodeState> states(static_cast<size_t>(g.node_count()));
  states[static_cast<size_t>(source)].cost = 0.0;
  return states;
}

bool relax_step(std::vector<NodeState>& states, const Graph& g) {
  std::vector<NodeState> next = states;
  bool changed = false;
  for (int i = 0; i < g.node_count(); ++i) {
    double best_offer = std::numeric_limits<double>::infinity();
    int best_from = -1;
    for (int id : g.in_edges(i)) {
      const Edge& e = g.edges()[id];
      const double offer = states[static_cast<size_t>(e.from)].cost + e.cost;
      if (offer < best_offer || (offer == best_offer && e.from < best_from)) {
        best_offer = offer;
        best_from = e.from;
      }
    }
    if (best_offer < states[static_cast<size_t>(i)].cost) {
      next[static_cast<size_t>(i)] = {best_from, best_offer};
      changed = true;
    }
  }
  states.swap(next);
  return changed;
}

RunResult run(const Graph& g, int s, int t, const StepHook& hook) {
  if (s == t) throw InvalidPath("source and destination must differ");
  const int n = g.node_count();
  RunResult result;
  result.states = initial_states(g, s);
  if (hook) hook(0, result.states);

  int changing_steps = 0;
  for (int step = 1; step <= n; ++step) {
    if (!relax_step(result.states, g)) break;
    changing_steps = step;
    if (hook) hook(step, result.states);
    if (step == n)
      throw std::logic_error("relaxation failed to settle in n steps");
  }
  result.steps_to_fixed_point = changing_steps;

  if (result.states[static_cast<size_t>(t)].cost ==
      std::numeric_limits<double>::infinity())
    return result;

  std::vector<int> nodes{t};
  int cur = t;
  while (cur != s) {
    cur = result.states[static_cast<size_t>(cur)].pred;
    if (cur < 0 || static_cast<int>(nodes.size()) > n)
      throw CorruptPointerField("predecessor chain does not reach the source");
    nodes.push_back(cur);
  }
  std::reverse(nodes.begin(), nodes.end());
  result.path = PathResult{nodes, result.states[static_cast<size_t>(t)].cost};
  return result;
}

}  // namespace casp::graphca
