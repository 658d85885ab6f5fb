#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "casp/grid.hpp"
#include "casp/kernels.hpp"

namespace casp::phys {

enum class Topology : std::uint8_t { Free = 0, Food = 1, Origin = 2, Wall = 3 };

// Update parameters. The diffusion rates are capped at 1/8 to keep the
// explicit Moore stencil stable; decay is off by default (mass conserved).
struct Params {
  double chem_diffusion = 0.05;    // f_c in (0, 1/8]
  double phys_diffusion = 0.05;    // f_p in (0, 1/8]
  double chem_source_level = 100.0;
  double dir_gain = 1.0;
  double pseudo_mass_floor = 1e-3;
  double initial_mass = 100.0;     // cytoplasm placed on each origin cell
  double phys_decay = 0.0;         // optional linear shrinkage, breaks conservation
  int max_steps = 2000;
};

// Five-field cell state {topology, chem, dir, phys, pseudo} on a padded
// grid, evolved by the runtime-dispatched kernels. One step is the fixed
// chem -> dir -> phys sub-step order, each sub-step double-buffered.
class Field {
 public:
  Field(const MazeGrid& maze, const Params& params,
        kernels::Backend backend = kernels::detect_backend());

  int height() const { return grid_.h; }
  int width() const { return grid_.w; }
  int step_count() const { return step_; }
  const Params& params() const { return params_; }
  kernels::Backend backend() const { return backend_; }

  Topology topology_at(CellCoord c) const;
  double chem_at(CellCoord c) const { return chem_[grid_.index(c.row, c.col)]; }
  double phys_at(CellCoord c) const { return phys_[grid_.index(c.row, c.col)]; }
  double dir_at(CellCoord c, Dir d) const;
  bool pseudo_at(CellCoord c) const;
  void set_pseudo(CellCoord c, bool on);

  void chem_step();
  void dir_step();
  void phys_step();
  void step();

  double total_mass() const;

  std::vector<CellCoord> origin_cells() const;
  std::vector<CellCoord> food_cells() const;

 private:
  friend std::optional<std::vector<CellCoord>> try_extract_tube(Field&, CellCoord);

  kernels::Grid2D grid_;
  Params params_;
  kernels::Backend backend_;
  std::vector<std::uint8_t> topo_;    // unpadded, row-major
  std::vector<std::uint8_t> pseudo_;  // unpadded, row-major
  std::vector<double> chem_, chem_next_;
  std::vector<double> phys_, phys_next_;
  std::vector<double> open_, food_;   // 0/1 masks, padded
  std::vector<double> dir_;           // 8 planes
  std::vector<double> flow_, flow_total_;
  int step_ = 0;
};

// True once the plasmodium has reached the food: its best Moore neighbor
// carries at least pseudo_mass_floor of mass.
bool food_reached(const Field& field, CellCoord food);

// Greedy max-mass walk food -> origin, marking pseudo along the way.
// Returns the tube with the food first and the origin last; fails with
// TubeExtractionFailed when the walk does not reach an origin within the
// cell budget (no usable gradient yet). Pseudo is only written on success.
std::vector<CellCoord> extract_tube(Field& field, CellCoord food);

// nullopt when no origin is reachable within the budget; never throws on
// the way (extraction is retried every step).
std::optional<std::vector<CellCoord>> try_extract_tube(Field& field, CellCoord food);

struct SolveOutcome {
  std::vector<CellCoord> tube;  // food first, origin last
  int steps = 0;
};

using FrameHook = std::function<void(const Field&)>;

// Steps the field until some food cell yields a tube, or gives up at
// params.max_steps (NoTube -> nullopt).
std::optional<SolveOutcome> solve_maze(const MazeGrid& maze, const Params& params,
                                       kernels::Backend backend = kernels::detect_backend(),
                                       const FrameHook& hook = {});

}  // namespace casp::phys
