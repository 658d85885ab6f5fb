#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "casp/dla.hpp"
#include "casp/errors.hpp"
#include "casp/oracle.hpp"

using namespace casp;
using namespace casp::dla;

namespace {

// Route A: 0 -> 1 -> 3 with expected length 1; route B: 0 -> 2 -> 3 with
// expected length 2. Deterministic edge lengths.
StochasticGraph two_route_graph() {
  StochasticGraph g(4);
  g.add_edge(0, 1, {{0.5, 1.0}});
  g.add_edge(0, 2, {{1.0, 1.0}});
  g.add_edge(1, 3, {{0.5, 1.0}});
  g.add_edge(2, 3, {{1.0, 1.0}});
  return g;
}

}  // namespace

TEST_CASE("single-edge episode reaches the destination") {
  StochasticGraph g(2);
  g.add_edge(0, 1, {{7.0, 1.0}});
  const auto automata = make_automata(g);
  std::mt19937_64 rng(5);
  const auto record = run_episode(g, automata, 0, 1, Config{}, rng);
  CHECK(record.outcome == Outcome::Reached);
  CHECK(record.path == std::vector<int>{0, 1});
  CHECK(record.sampled_length == 7.0);
  REQUIRE(record.choices.size() == 1);
  CHECK(record.choices[0] == std::pair<int, int>{0, 0});
}

TEST_CASE("source without actions dead-ends immediately") {
  StochasticGraph g(2);
  g.add_edge(1, 0, {{1.0, 1.0}});
  const auto automata = make_automata(g);
  std::mt19937_64 rng(5);
  const auto record = run_episode(g, automata, 0, 1, Config{}, rng);
  CHECK(record.outcome == Outcome::DeadEnd);
  CHECK(record.path == std::vector<int>{0});
}

TEST_CASE("cycle-only graph trips the visit cap") {
  StochasticGraph g(3);
  g.add_edge(0, 1, {{1.0, 1.0}});
  g.add_edge(1, 0, {{1.0, 1.0}});
  const auto automata = make_automata(g);
  std::mt19937_64 rng(5);
  const auto record = run_episode(g, automata, 0, 2, Config{}, rng);
  CHECK(record.outcome == Outcome::CapExceeded);
  CHECK(static_cast<int>(record.path.size()) <= g.node_count());
}

TEST_CASE("dynamic threshold is the running mean of reached lengths") {
  DynamicThreshold threshold;
  CHECK(std::isinf(threshold.value()));
  threshold.record(4.0, Outcome::Reached);
  threshold.record(6.0, Outcome::Reached);
  CHECK(threshold.value() == doctest::Approx(5.0));

  DynamicThreshold fresh;
  fresh.record(3.0, Outcome::Reached);
  CHECK(fresh.value() == doctest::Approx(3.0));
  fresh.record(5.0, Outcome::Reached);
  CHECK(fresh.value() == doctest::Approx(4.0));

  // Failed episodes only count in the all-episodes variant.
  DynamicThreshold strict;
  strict.record(9.0, Outcome::DeadEnd);
  CHECK(std::isinf(strict.value()));
  DynamicThreshold lax(true);
  lax.record(9.0, Outcome::DeadEnd);
  CHECK(lax.value() == doctest::Approx(9.0));
}

TEST_CASE("single-action automata never change") {
  StochasticGraph g(2);
  g.add_edge(0, 1, {{1.0, 1.0}});
  auto automata = make_automata(g);
  update_automata(automata, {{0, 0}}, Signal::Reward, Config{});
  CHECK(automata[0].probs == std::vector<double>{1.0});
  update_automata(automata, {{0, 0}}, Signal::Penalty, Config{});
  CHECK(automata[0].probs == std::vector<double>{1.0});
}

TEST_CASE("linear reward update") {
  StochasticGraph g(3);
  g.add_edge(0, 1, {{1.0, 1.0}});
  g.add_edge(0, 2, {{1.0, 1.0}});
  auto automata = make_automata(g);
  Config config;
  config.reward_rate = 0.2;
  update_automata(automata, {{0, 0}}, Signal::Reward, config);
  CHECK(automata[0].probs[0] == doctest::Approx(0.6));
  CHECK(automata[0].probs[1] == doctest::Approx(0.4));
}

TEST_CASE("linear penalty update") {
  StochasticGraph g(3);
  g.add_edge(0, 1, {{1.0, 1.0}});
  g.add_edge(0, 2, {{1.0, 1.0}});
  auto automata = make_automata(g);
  automata[0].probs = {0.6, 0.4};
  Config config;
  config.penalty_rate = 0.1;
  update_automata(automata, {{0, 0}}, Signal::Penalty, config);
  CHECK(automata[0].probs[0] == doctest::Approx(0.54));
  CHECK(automata[0].probs[1] == doctest::Approx(0.46));
}

TEST_CASE("update rejects unknown actions") {
  StochasticGraph g(2);
  g.add_edge(0, 1, {{1.0, 1.0}});
  auto automata = make_automata(g);
  CHECK_THROWS_AS(update_automata(automata, {{0, 3}}, Signal::Reward, Config{}),
                  InvalidUpdate);
  CHECK_THROWS_AS(update_automata(automata, {{9, 0}}, Signal::Reward, Config{}),
                  InvalidUpdate);
}

TEST_CASE("probability simplex survives fuzzed updates") {
  StochasticGraph g(4);
  for (int v = 1; v < 4; ++v) g.add_edge(0, v, {{1.0, 1.0}});
  auto automata = make_automata(g);
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> action(0, 2);
  std::uniform_real_distribution<double> rate(0.01, 0.5);
  std::uniform_int_distribution<int> which(0, 1);
  for (int i = 0; i < 100000; ++i) {
    Config config;
    config.reward_rate = rate(rng);
    config.penalty_rate = rate(rng);
    const Signal signal = which(rng) ? Signal::Reward : Signal::Penalty;
    update_automata(automata, {{0, action(rng)}}, signal, config);
    double sum = 0.0;
    for (const double p : automata[0].probs) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      sum += p;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("reward-inaction keeps unrewarded probabilities non-increasing") {
  StochasticGraph g(3);
  g.add_edge(0, 1, {{1.0, 1.0}});
  g.add_edge(0, 2, {{1.0, 1.0}});
  auto automata = make_automata(g);
  Config config;  // penalty_rate = 0
  double last = automata[0].probs[1];
  for (int i = 0; i < 50; ++i) {
    update_automata(automata, {{0, 0}}, i % 3 ? Signal::Reward : Signal::Penalty, config);
    CHECK(automata[0].probs[1] <= last + 1e-15);
    last = automata[0].probs[1];
  }
}

TEST_CASE("identical seeds give identical run transcripts") {
  const StochasticGraph g = two_route_graph();
  Config config;
  config.max_episodes = 500;
  std::vector<TraceRow> t1, t2;
  const auto r1 = solve(g, 0, 3, config, 99, &t1);
  const auto r2 = solve(g, 0, 3, config, 99, &t2);
  REQUIRE(t1.size() == t2.size());
  for (size_t i = 0; i < t1.size(); ++i) {
    CHECK(t1[i].sampled_length == t2[i].sampled_length);
    CHECK(t1[i].threshold == t2[i].threshold);
    CHECK(t1[i].best_path_prob == t2[i].best_path_prob);
  }
  REQUIRE(r1.path.has_value());
  REQUIRE(r2.path.has_value());
  CHECK(r1.path->nodes == r2.path->nodes);
  CHECK(r1.episodes == r2.episodes);
}

TEST_CASE("single-route graph converges to probability one") {
  StochasticGraph g(3);
  g.add_edge(0, 1, {{2.0, 1.0}});
  g.add_edge(1, 2, {{2.0, 1.0}});
  Config config;
  config.stop_prob_threshold = 0.999;
  const auto result = solve(g, 0, 2, config, 1);
  REQUIRE(result.path.has_value());
  CHECK(result.path->nodes == std::vector<int>{0, 1, 2});
  CHECK(result.path->cost == doctest::Approx(4.0));
  CHECK(result.best_path_prob == doctest::Approx(1.0));
}

TEST_CASE("two-route graph mostly converges to the shorter route") {
  const StochasticGraph g = two_route_graph();
  Config config;  // a = 0.05, b = 0
  int correct = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto result = solve(g, 0, 3, config, seed);
    if (result.path && result.path->nodes == std::vector<int>{0, 1, 3}) ++correct;
  }
  CHECK(correct >= 26);
}

TEST_CASE("stochastic two-route graph finds the lower expectation") {
  // Expected lengths 3.0 vs 3.5 over noisy edges.
  StochasticGraph g(4);
  g.add_edge(0, 1, {{1.0, 0.5}, {2.0, 0.5}});  // mean 1.5
  g.add_edge(1, 3, {{1.0, 0.5}, {2.0, 0.5}});  // mean 1.5 -> route 3.0
  g.add_edge(0, 2, {{1.0, 0.5}, {3.0, 0.5}});  // mean 2.0
  g.add_edge(2, 3, {{1.5, 1.0}});              // -> route 3.5
  Config config;
  config.reward_rate = 0.03;
  int correct = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto result = solve(g, 0, 3, config, seed);
    if (result.path && result.path->nodes == std::vector<int>{0, 1, 3}) ++correct;
  }
  CHECK(correct >= 24);
}

TEST_CASE("solve validates configuration ranges") {
  StochasticGraph g(2);
  g.add_edge(0, 1, {{1.0, 1.0}});
  Config bad;
  bad.reward_rate = 1.5;
  CHECK_THROWS_AS(solve(g, 0, 1, bad, 1), InvalidUpdate);
  bad = Config{};
  bad.penalty_rate = -0.1;
  CHECK_THROWS_AS(solve(g, 0, 1, bad, 1), InvalidUpdate);
  bad = Config{};
  bad.stop_prob_threshold = 1.0;
  CHECK_THROWS_AS(solve(g, 0, 1, bad, 1), InvalidUpdate);
}
