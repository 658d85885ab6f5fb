#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace casp::scenario {

// One solver invocation: which algorithm, on which instance, what to emit.
struct ScenarioConfig {
  std::string algo;        // wave | lee | graph-ca | dla | physarum | oracle
  std::string input_path;
  std::string source;      // "R,C" on grids, node id on graphs; may be empty
  std::string dest;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int max_steps = -1;      // algorithm default when negative
  std::string metric = "hop_delay";       // raw | hop_delay (wave only)
  std::string emit_frames = "none";       // none | ascii | pgm
  int every = 1;                          // frame cadence
  std::string out_dir = ".";
  bool verify = false;     // run the matching oracle and record agreement
  std::string backend;     // "", auto, scalar, avx2 (physarum kernels)
  std::string params_path; // physarum parameter JSON
};

inline constexpr int kExitFound = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoPath = 2;

struct ScenarioOutcome {
  int exit_code = kExitError;
  nlohmann::json result;
};

// Runs the scenario, writes result.json (and frames/traces) under
// cfg.out_dir and returns the exit status plus the parsed result document.
// Parse and I/O problems throw; the CLI maps those to exit 1.
ScenarioOutcome run_scenario(const ScenarioConfig& cfg);

}  // namespace casp::scenario
