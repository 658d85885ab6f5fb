#include "casp/dla.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "casp/errors.hpp"

namespace casp::dla {

std::vector<Automaton> make_automata(const StochasticGraph& g) {
  std::vector<Automaton> automata(static_cast<size_t>(g.node_count()));
  for (int node = 0; node < g.node_count(); ++node) {
    Automaton& a = automata[static_cast<size_t>(node)];
    a.node = node;
    a.edge_ids = g.out_edges(node);
    if (!a.edge_ids.empty())
      a.probs.assign(a.edge_ids.size(), 1.0 / static_cast<double>(a.edge_ids.size()));
  }
  return automata;
}

namespace {

int sample_action(const Automaton& a, std::mt19937_64& rng) {
  double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  for (size_t i = 0; i < a.probs.size(); ++i) {
    if (u < a.probs[i]) return static_cast<int>(i);
    u -= a.probs[i];
  }
  return static_cast<int>(a.probs.size()) - 1;
}

}  // namespace

EpisodeRecord run_episode(const StochasticGraph& g, const std::vector<Automaton>& automata,
                          int s, int t, const Config& config, std::mt19937_64& rng) {
  EpisodeRecord record;
  record.path.push_back(s);

  const int cap = std::max(
      1, static_cast<int>(config.visit_cap_multiplier * g.node_count()));
  int cur = s;
  int visited = 1;
  while (cur != t) {
    const Automaton& a = automata[static_cast<size_t>(cur)];
    if (a.edge_ids.empty()) {
      record.outcome = Outcome::DeadEnd;
      return record;
    }
    if (visited >= cap) {
      record.outcome = Outcome::CapExceeded;
      return record;
    }
    const int action = sample_action(a, rng);
    const StochasticEdge& edge = g.edges()[a.edge_ids[static_cast<size_t>(action)]];
    record.choices.emplace_back(cur, action);
    record.sampled_length += sample_edge(g, edge.from, edge.to, rng);
    cur = edge.to;
    record.path.push_back(cur);
    ++visited;
  }
  record.outcome = Outcome::Reached;
  return record;
}

double DynamicThreshold::value() const {
  if (count_ == 0) return std::numeric_limits<double>::infinity();
  return sum_ / count_;
}

void DynamicThreshold::record(double sampled_length, Outcome outcome) {
  if (!include_all_ && outcome != Outcome::Reached) return;
  sum_ += sampled_length;
  ++count_;
}

void update_automata(std::vector<Automaton>& automata,
                     const std::vector<std::pair<int, int>>& choices, Signal signal,
                     const Config& config) {
  const double a = config.reward_rate;
  const double b = config.penalty_rate;
  for (const auto& [node, action] : choices) {
    if (node < 0 || node >= static_cast<int>(automata.size()))
      throw InvalidUpdate("update for unknown automaton " + std::to_string(node));
    Automaton& la = automata[static_cast<size_t>(node)];
    const size_t r = la.probs.size();
    if (action < 0 || static_cast<size_t>(action) >= r)
      throw InvalidUpdate("automaton " + std::to_string(node) + " has no action " +
                          std::to_string(action));
    if (r < 2) continue;  // a single action keeps probability 1

    const size_t chosen = static_cast<size_t>(action);
    if (signal == Signal::Reward) {
      for (size_t j = 0; j < r; ++j) {
        if (j == chosen)
          la.probs[j] += a * (1.0 - la.probs[j]);
        else
          la.probs[j] -= a * la.probs[j];
      }
    } else if (b > 0.0) {
      for (size_t j = 0; j < r; ++j) {
        if (j == chosen)
          la.probs[j] -= b * la.probs[j];
        else
          la.probs[j] += b * (1.0 / static_cast<double>(r - 1) - la.probs[j]);
      }
    }
  }
}

std::vector<int> most_probable_path(const StochasticGraph& g,
                                    const std::vector<Automaton>& automata, int s, int t,
                                    double* prob_product) {
  std::vector<int> path{s};
  std::vector<bool> seen(static_cast<size_t>(g.node_count()), false);
  seen[static_cast<size_t>(s)] = true;
  double product = 1.0;
  int cur = s;
  while (cur != t) {
    const Automaton& a = automata[static_cast<size_t>(cur)];
    if (a.edge_ids.empty()) return {};
    size_t best = 0;
    for (size_t i = 1; i < a.probs.size(); ++i)
      if (a.probs[i] > a.probs[best]) best = i;
    product *= a.probs[best];
    cur = g.edges()[a.edge_ids[best]].to;
    if (seen[static_cast<size_t>(cur)]) return {};  // greedy walk cycles
    seen[static_cast<size_t>(cur)] = true;
    path.push_back(cur);
  }
  if (prob_product) *prob_product = product;
  return path;
}

SolveResult solve(const StochasticGraph& g, int s, int t, const Config& config,
                  std::uint64_t seed, std::vector<TraceRow>* trace) {
  if (!(config.reward_rate > 0.0 && config.reward_rate < 1.0))
    throw InvalidUpdate("reward_rate must be in (0, 1)");
  if (!(config.penalty_rate >= 0.0 && config.penalty_rate < 1.0))
    throw InvalidUpdate("penalty_rate must be in [0, 1)");
  if (!(config.stop_prob_threshold > 0.0 && config.stop_prob_threshold < 1.0))
    throw InvalidUpdate("stop_prob_threshold must be in (0, 1)");
  if (config.max_episodes < 1 || config.visit_cap_multiplier <= 0.0)
    throw InvalidUpdate("max_episodes and visit_cap_multiplier must be positive");
  std::mt19937_64 rng(seed);
  SolveResult result;
  result.automata = make_automata(g);
  DynamicThreshold threshold(config.threshold_all_episodes);

  for (int episode = 0; episode < config.max_episodes; ++episode) {
    const EpisodeRecord record = run_episode(g, result.automata, s, t, config, rng);
    const double threshold_before = threshold.value();
    const Signal signal =
        record.outcome == Outcome::Reached && record.sampled_length <= threshold_before
            ? Signal::Reward
            : Signal::Penalty;
    update_automata(result.automata, record.choices, signal, config);
    threshold.record(record.sampled_length, record.outcome);
    result.episodes = episode + 1;

    double product = 0.0;
    const std::vector<int> best = most_probable_path(g, result.automata, s, t, &product);
    if (trace)
      trace->push_back({episode, record.sampled_length, threshold.value(),
                        best.empty() ? 0.0 : product});
    if (!best.empty() && product >= config.stop_prob_threshold) break;
  }

  double product = 0.0;
  const std::vector<int> best = most_probable_path(g, result.automata, s, t, &product);
  if (!best.empty()) {
    result.path = PathResult{best, expected_path_length(g, best)};
    result.best_path_prob = product;
  }
  return result;
}

}  // namespace casp::dla
