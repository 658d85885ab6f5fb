// casp: run one cellular-automata shortest-path scenario and write
// result.json (plus optional frames and CSV traces) to the output directory.
// Exit status: 0 path found, 2 no path, 1 error.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "casp/scenario.hpp"

int main(int argc, char** argv) {
  casp::scenario::ScenarioConfig cfg;

  CLI::App app{"cellular-automata shortest path laboratory"};
  app.add_option("--algo", cfg.algo,
                 "algorithm: wave | lee | graph-ca | dla | physarum | oracle")
      ->required();
  app.add_option("--input", cfg.input_path, "instance file")->required();
  app.add_option("--source", cfg.source, "source: ROW,COL on grids, node id on graphs");
  app.add_option("--dest", cfg.dest, "destination (food cell for physarum)");
  auto* seed_opt = app.add_option("--seed", cfg.seed, "rng seed (required for dla)");
  app.add_option("--max-steps", cfg.max_steps,
                 "step budget (episodes for dla); algorithm default when omitted");
  app.add_option("--metric", cfg.metric, "wave cost metric: raw | hop_delay")
      ->check(CLI::IsMember({"raw", "hop_delay"}));
  app.add_option("--emit-frames", cfg.emit_frames, "frame format: none | ascii | pgm")
      ->check(CLI::IsMember({"none", "ascii", "pgm"}));
  app.add_option("--every", cfg.every, "emit every N-th frame")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_dir, "output directory (default .)");
  app.add_flag("--verify", cfg.verify, "also run the matching exact oracle");
  app.add_option("--backend", cfg.backend, "physarum kernels: auto | scalar | avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  app.add_option("--params", cfg.params_path, "physarum parameter JSON");

  CLI11_PARSE(app, argc, argv);
  cfg.seed_set = seed_opt->count() > 0;

  try {
    const auto outcome = casp::scenario::run_scenario(cfg);
    return outcome.exit_code;
  } catch (const std::exception& err) {
    std::cerr << "casp: " << err.what() << '\n';
    return casp::scenario::kExitError;
  }
}
