#include "casp/scenario.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "casp/dla.hpp"
#include "casp/errors.hpp"
#include "casp/frames.hpp"
#include "casp/graph.hpp"
#include "casp/graph_ca.hpp"
#include "casp/grid.hpp"
#include "casp/lee_ca.hpp"
#include "casp/oracle.hpp"
#include "casp/physarum.hpp"
#include "casp/wave_ca.hpp"

namespace casp::scenario {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CellCoord parse_cell(const std::string& text, const char* what) {
  const size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError(std::string(what) + " must be \"ROW,COL\", got \"" + text + "\"");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " must be \"ROW,COL\", got \"" + text + "\"");
  }
}

int parse_node(const std::string& text, const char* what) {
  try {
    return std::stoi(text);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " must be a node id, got \"" + text + "\"");
  }
}

json cell_path_json(const std::vector<CellCoord>& path) {
  json out = json::array();
  for (const CellCoord& c : path) out.push_back(json::array({c.row, c.col}));
  return out;
}

json node_path_json(const std::vector<int>& path) {
  json out = json::array();
  for (const int n : path) out.push_back(n);
  return out;
}

// Shared frame sink: numbers frames by automaton step, honors the cadence,
// and rejects formats the algorithm cannot render.
class FrameSink {
 public:
  FrameSink(const ScenarioConfig& cfg, bool supported) : cfg_(&cfg) {
    enabled_ = cfg.emit_frames != "none";
    if (enabled_ && cfg.emit_frames != "ascii" && cfg.emit_frames != "pgm")
      throw UnsupportedFormat("unknown frame format: " + cfg.emit_frames);
    if (enabled_ && !supported)
      throw UnsupportedFormat(cfg.algo + " does not emit " + cfg.emit_frames +
                              " frames");
  }

  bool enabled() const { return enabled_; }

  template <typename Snapshot>
  void emit(const Snapshot& snap, int step) {
    if (!enabled_ || step % std::max(1, cfg_->every) != 0) return;
    const std::string stem = frame_stem(step);
    if (cfg_->emit_frames == "ascii")
      frames::write_file(stem + ".txt", frames::ascii_frame(snap));
    else
      frames::write_file(stem + ".pgm", frames::pgm_frame(snap));
  }

  void emit_pseudo(const phys::Field& field, int step) {
    if (!enabled_ || step % std::max(1, cfg_->every) != 0) return;
    if (cfg_->emit_frames == "pgm")
      frames::write_file(frame_stem(step) + "_pseudo.pgm",
                         frames::pgm_pseudo_overlay(field));
  }

 private:
  std::string frame_stem(int step) const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06d", step);
    return (fs::path(cfg_->out_dir) / (std::string("frame_") + buf)).string();
  }

  const ScenarioConfig* cfg_ = nullptr;
  bool enabled_ = false;
};

bool looks_like_graph(const std::string& text) {
  for (const char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
  }
  return false;
}

phys::Params load_phys_params(const ScenarioConfig& cfg) {
  phys::Params params;
  if (!cfg.params_path.empty()) {
    const json doc = json::parse(read_file(cfg.params_path));
    params.chem_diffusion = doc.value("chem_diffusion", params.chem_diffusion);
    params.phys_diffusion = doc.value("phys_diffusion", params.phys_diffusion);
    params.chem_source_level = doc.value("chem_source_level", params.chem_source_level);
    params.dir_gain = doc.value("dir_gain", params.dir_gain);
    params.pseudo_mass_floor = doc.value("pseudo_mass_floor", params.pseudo_mass_floor);
    params.initial_mass = doc.value("initial_mass", params.initial_mass);
    params.phys_decay = doc.value("phys_decay", params.phys_decay);
    params.max_steps = doc.value("max_steps", params.max_steps);
  }
  if (cfg.max_steps >= 0) params.max_steps = cfg.max_steps;
  return params;
}

struct MazeEndpoints {
  MazeGrid maze;
  CellCoord source;
  CellCoord dest;
};

// Maze endpoints come from the file's S/E cells; --source/--dest override
// them (the old markers revert to free space).
MazeEndpoints maze_with_endpoints(const ScenarioConfig& cfg, const std::string& text,
                                  CellKind dest_kind) {
  MazeGrid maze = parse_maze(text);
  auto relocate = [&](CellKind kind, const std::string& override_text,
                      const char* what) -> CellCoord {
    std::vector<CellCoord> found = maze.find_all(kind);
    if (!override_text.empty()) {
      const CellCoord c = parse_cell(override_text, what);
      for (const CellCoord& old : found) maze.set(old, CellKind::Free);
      maze.set(c, kind);
      return c;
    }
    if (found.empty())
      throw ParseError(std::string("maze has no ") + what + " cell and none was given");
    return found.front();
  };
  const CellCoord source = relocate(CellKind::Source, cfg.source, "source");
  const CellCoord dest =
      relocate(dest_kind, cfg.dest, dest_kind == CellKind::Dest ? "dest" : "food");
  return {std::move(maze), source, dest};
}

json run_wave(const ScenarioConfig& cfg, json& result) {
  const WeightedLattice lat = parse_weighted_lattice(read_file(cfg.input_path));
  if (cfg.source.empty() || cfg.dest.empty())
    throw ParseError("wave needs --source and --dest as ROW,COL");
  const CellCoord source = parse_cell(cfg.source, "source");
  const CellCoord dest = parse_cell(cfg.dest, "dest");
  const LatticeMetric metric = parse_metric(cfg.metric);

  FrameSink sink(cfg, true);
  const auto outcome = wave::run_s3dsp(
      lat, source, dest, cfg.max_steps,
      sink.enabled() ? wave::FrameHook([&](const wave::WaveConfiguration& c) {
        sink.emit(c, c.step_count());
      })
                     : wave::FrameHook{});

  result["metric"] = metric_name(metric);
  if (!outcome) {
    result["found"] = false;
    return result;
  }
  const int hops = static_cast<int>(outcome->path.size()) - 1;
  result["found"] = true;
  result["steps"] = outcome->arrival_step;
  result["arrival_step"] = outcome->arrival_step;
  result["raw_cost"] = outcome->raw_cost;
  result["cost"] = metric == LatticeMetric::raw ? outcome->raw_cost
                                                : outcome->raw_cost + 2 * hops;
  result["path"] = cell_path_json(outcome->path);

  if (cfg.verify) {
    const Graph g = from_lattice(lat, LatticeMetric::hop_delay);
    const auto table = oracle::dijkstra(g, lat.index(source));
    const double want = table.dist[lat.index(dest)];
    result["oracle_cost"] = want;
    result["oracle_match"] = want == static_cast<double>(outcome->arrival_step) &&
                             want == outcome->raw_cost + 2.0 * hops;
  }
  return result;
}

json run_lee(const ScenarioConfig& cfg, json& result) {
  auto [maze, source, dest] = maze_with_endpoints(cfg, read_file(cfg.input_path),
                                                  CellKind::Dest);
  FrameSink sink(cfg, true);
  const auto output = lee::lee_route(
      lee::LeeGrid::from_maze(maze), cfg.max_steps,
      sink.enabled()
          ? lee::FrameHook([&](const lee::LeeGrid& g) { sink.emit(g, g.step_count()); })
          : lee::FrameHook{});

  result["steps"] = output.steps;
  if (!output.route) {
    result["found"] = false;
  } else {
    result["found"] = true;
    result["cost"] = output.route->cost;
    result["path"] = cell_path_json(output.route->path);
    result["steps_ready"] = output.route->steps_ready;
    result["steps_clean"] = output.route->steps_clean;
  }

  if (cfg.verify) {
    const auto hops = oracle::bfs_hops(maze, source, Scheme::vonNeumann4);
    const int want = hops[static_cast<size_t>(dest.row) * maze.width() + dest.col];
    result["oracle_cost"] = want;
    result["oracle_match"] =
        output.route ? want == output.route->cost : want < 0;
  }
  return result;
}

json run_graph_ca(const ScenarioConfig& cfg, json& result) {
  const Graph g = parse_graph(read_file(cfg.input_path));
  if (cfg.source.empty() || cfg.dest.empty())
    throw ParseError("graph-ca needs --source and --dest node ids");
  const int s = parse_node(cfg.source, "source");
  const int t = parse_node(cfg.dest, "dest");
  FrameSink sink(cfg, false);  // state dumps are CSV, not frames

  std::ofstream trace(fs::path(cfg.out_dir) / "trace.csv");
  trace << "step,node,pred,cost\n";
  const auto hook = [&](int step, const std::vector<graphca::NodeState>& states) {
    for (size_t node = 0; node < states.size(); ++node) {
      trace << step << ',' << node << ',' << states[node].pred << ',';
      if (std::isinf(states[node].cost))
        trace << "inf";
      else
        trace << states[node].cost;
      trace << '\n';
    }
  };
  const auto run = graphca::run(g, s, t, hook);

  result["steps"] = run.steps_to_fixed_point;
  if (!run.path) {
    result["found"] = false;
  } else {
    result["found"] = true;
    result["cost"] = run.path->cost;
    result["path"] = node_path_json(run.path->nodes);
  }

  if (cfg.verify) {
    const auto table = oracle::dijkstra(g, s);
    const double want = table.dist[static_cast<size_t>(t)];
    if (std::isinf(want)) {
      result["oracle_cost"] = "inf";
      result["oracle_match"] = !run.path.has_value();
    } else {
      result["oracle_cost"] = want;
      result["oracle_match"] =
          run.path.has_value() && std::abs(run.path->cost - want) <= 1e-9;
    }
  }
  return result;
}

json run_dla(const ScenarioConfig& cfg, json& result) {
  const StochasticGraph g = parse_stochastic_graph(read_file(cfg.input_path));
  if (cfg.source.empty() || cfg.dest.empty())
    throw ParseError("dla needs --source and --dest node ids");
  if (!cfg.seed_set) throw ParseError("dla needs --seed for reproducible episodes");
  const int s = parse_node(cfg.source, "source");
  const int t = parse_node(cfg.dest, "dest");
  FrameSink sink(cfg, false);

  dla::Config config;
  if (cfg.max_steps >= 0) config.max_episodes = cfg.max_steps;

  std::vector<dla::TraceRow> rows;
  const auto solved = dla::solve(g, s, t, config, cfg.seed, &rows);

  std::ofstream trace(fs::path(cfg.out_dir) / "trace.csv");
  trace << "episode,sampled_length,threshold,best_path_prob\n";
  for (const dla::TraceRow& row : rows) {
    trace << row.episode << ',' << row.sampled_length << ',';
    if (std::isinf(row.threshold))
      trace << "inf";
    else
      trace << row.threshold;
    trace << ',' << row.best_path_prob << '\n';
  }

  result["steps"] = solved.episodes;
  result["episodes"] = solved.episodes;
  if (!solved.path) {
    result["found"] = false;
  } else {
    result["found"] = true;
    result["cost"] = solved.path->cost;  // exact expected length
    result["path"] = node_path_json(solved.path->nodes);
    result["best_path_prob"] = solved.best_path_prob;
  }

  if (cfg.verify) {
    if (g.node_count() <= 10) {
      const auto paths = oracle::enumerate_simple_paths(
          g, s, t, std::min(12, g.node_count()));
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : paths)
        best = std::min(best, expected_path_length(g, p));
      if (std::isinf(best)) {
        result["oracle_cost"] = "inf";
        result["oracle_match"] = !solved.path.has_value();
      } else {
        result["oracle_cost"] = best;
        result["oracle_match"] =
            solved.path.has_value() && std::abs(solved.path->cost - best) <= 1e-9;
      }
    } else {
      result["oracle_match"] = nullptr;
      result["oracle_note"] = "exhaustive oracle limited to 10 nodes";
    }
  }
  return result;
}

json run_physarum(const ScenarioConfig& cfg, json& result) {
  auto [maze, source, food] = maze_with_endpoints(cfg, read_file(cfg.input_path),
                                                  CellKind::Food);
  const phys::Params params = load_phys_params(cfg);
  kernels::Backend backend = kernels::detect_backend();
  if (!cfg.backend.empty() && cfg.backend != "auto") {
    const auto parsed = kernels::parse_backend(cfg.backend);
    if (!parsed) throw ParseError("unknown backend: " + cfg.backend);
    backend = *parsed;
  }

  FrameSink sink(cfg, true);
  const auto outcome = phys::solve_maze(
      maze, params, backend,
      sink.enabled() ? phys::FrameHook([&](const phys::Field& f) {
        sink.emit(f, f.step_count());
        sink.emit_pseudo(f, f.step_count());
      })
                     : phys::FrameHook{});

  result["backend"] = kernels::backend_name(backend);
  if (!outcome) {
    result["found"] = false;
    result["steps"] = params.max_steps;
  } else {
    result["found"] = true;
    result["steps"] = outcome->steps;
    result["cost"] = static_cast<int>(outcome->tube.size());
    result["path"] = cell_path_json(outcome->tube);
  }

  if (cfg.verify) {
    const auto bfs = oracle::bfs_path(maze, food, source, Scheme::moore8);
    if (!bfs) {
      result["oracle_cost"] = "inf";
      result["oracle_match"] = !outcome.has_value();
    } else {
      result["oracle_cost"] = static_cast<int>(bfs->size());
      result["oracle_match"] =
          outcome.has_value() &&
          static_cast<double>(outcome->tube.size()) <= 1.1 * bfs->size();
    }
  }
  return result;
}

json run_oracle(const ScenarioConfig& cfg, json& result) {
  const std::string text = read_file(cfg.input_path);
  FrameSink sink(cfg, false);
  if (looks_like_graph(text)) {
    const Graph g = parse_graph(text);
    if (cfg.source.empty() || cfg.dest.empty())
      throw ParseError("oracle on a graph needs --source and --dest node ids");
    const int s = parse_node(cfg.source, "source");
    const int t = parse_node(cfg.dest, "dest");
    const auto table = oracle::dijkstra(g, s);
    result["steps"] = 0;
    if (std::isinf(table.dist[static_cast<size_t>(t)])) {
      result["found"] = false;
    } else {
      std::vector<int> nodes{t};
      for (int cur = t; cur != s;) {
        cur = table.pred[static_cast<size_t>(cur)];
        nodes.push_back(cur);
      }
      std::reverse(nodes.begin(), nodes.end());
      result["found"] = true;
      result["cost"] = table.dist[static_cast<size_t>(t)];
      result["path"] = node_path_json(nodes);
    }
  } else {
    auto [maze, source, dest] = maze_with_endpoints(cfg, text, CellKind::Dest);
    const std::vector<double> weights(
        static_cast<size_t>(maze.height()) * maze.width(), 1.0);
    const auto ref = oracle::lee_reference(maze, weights, source, dest);
    if (!ref) {
      result["found"] = false;
    } else {
      result["found"] = true;
      result["cost"] = ref->cost;
      result["steps"] = ref->reach_step;
      result["path"] = cell_path_json(ref->path);
    }
  }
  if (cfg.verify) result["oracle_match"] = true;  // it is the oracle
  return result;
}

}  // namespace

ScenarioOutcome run_scenario(const ScenarioConfig& cfg) {
  fs::create_directories(cfg.out_dir);

  json result;
  result["algorithm"] = cfg.algo;
  result["input"] = cfg.input_path;
  result["source"] = cfg.source;
  result["dest"] = cfg.dest;
  result["seed"] = cfg.seed_set ? json(cfg.seed) : json(nullptr);
  result["metric"] = nullptr;
  result["found"] = false;
  result["cost"] = nullptr;
  result["steps"] = nullptr;
  result["path"] = nullptr;

  if (cfg.algo == "wave")
    run_wave(cfg, result);
  else if (cfg.algo == "lee")
    run_lee(cfg, result);
  else if (cfg.algo == "graph-ca")
    run_graph_ca(cfg, result);
  else if (cfg.algo == "dla")
    run_dla(cfg, result);
  else if (cfg.algo == "physarum")
    run_physarum(cfg, result);
  else if (cfg.algo == "oracle")
    run_oracle(cfg, result);
  else
    throw ParseError("unknown algorithm: " + cfg.algo);

  const std::string path = (fs::path(cfg.out_dir) / "result.json").string();
  frames::write_file(path, result.dump(2) + "\n");

  return {result["found"].get<bool>() ? kExitFound : kExitNoPath, result};
}

}  // namespace casp::scenario
