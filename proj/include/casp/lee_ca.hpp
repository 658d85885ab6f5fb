#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "casp/grid.hpp"

namespace casp::lee {

// The complete 14-state alphabet. Wave and path blocks keep the same
// direction order so a wave mark converts to its path mark by adding 4.
enum class State : std::uint8_t {
  Free = 0,
  Obstacle,
  Start,
  End,
  WaveUp,
  WaveDown,
  WaveLeft,
  WaveRight,
  PathUp,
  PathDown,
  PathLeft,
  PathRight,
  Clear,
  Ready,
};

inline constexpr int kStateCount = 14;

bool is_wave(State s);
bool is_path(State s);
State wave_to_path(State s);
// Direction a wave/path mark points at (toward the start side).
Dir mark_dir(State s);
State wave_toward(Dir d);

// Grid routing automaton after Lee: wave expansion stores backward
// direction marks instead of accumulated weights, the path is grown
// backward from the end along the marks, and unused marks are flooded away
// by the clear state. Unit weights only.
class LeeGrid {
 public:
  LeeGrid(int height, int width);
  static LeeGrid from_maze(const MazeGrid& maze);

  int height() const { return height_; }
  int width() const { return width_; }
  int step_count() const { return step_; }

  State at(CellCoord c) const { return cells_[index(c)]; }
  void set(CellCoord c, State s) { cells_[index(c)] = s; }
  const std::vector<State>& cells() const { return cells_; }

  void step();

  bool has_state(State s) const;
  // Ready reached and every wave/clear mark is gone.
  bool routed_and_clean() const;
  // The last step changed nothing.
  bool at_fixed_point() const { return fixed_point_; }

 private:
  int index(CellCoord c) const { return c.row * width_ + c.col; }

  int height_;
  int width_;
  std::vector<State> cells_;
  std::vector<State> next_;
  int step_ = 0;
  bool fixed_point_ = false;
};

struct LeeRouteResult {
  std::vector<CellCoord> path;  // start first, end last
  int cost = 0;                 // unit-weight hop count = path cells + 1
  int steps_ready = 0;          // step at which the start turned ready
  int steps_clean = 0;          // step at which the grid was ready and residue-free
};

struct LeeRunOutput {
  std::optional<LeeRouteResult> route;
  LeeGrid grid;  // final configuration
  int steps = 0;
};

using FrameHook = std::function<void(const LeeGrid&)>;

// Steps until the route is built and cleaned up, or until the grid stops
// changing without one (NoPath). max_steps < 0 picks a 4*h*w budget.
LeeRunOutput lee_route(LeeGrid grid, int max_steps = -1, const FrameHook& hook = {});

}  // namespace casp::lee
