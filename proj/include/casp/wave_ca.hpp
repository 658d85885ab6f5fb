#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "casp/grid.hpp"

namespace casp::wave {

enum class Phase : std::uint8_t { Quiescent, Countdown, Excited, Done };

inline constexpr int kNoPointer = -1;  // the initial pointer value

struct WaveCell {
  Phase phase = Phase::Quiescent;
  int count = 0;             // meaningful only while phase == Countdown
  int pointer = kNoPointer;  // direction index of the neighbor the wave came from
};

// Per-cell backtrack pointers of a finished run. dir[i] is the direction
// index (cell frame) of the predecessor, kNoPointer where unset.
struct PointerField {
  int height = 0;
  int width = 0;
  std::vector<int> dir;
};

// Synchronous excitation-wave automaton over a weighted oriented lattice.
// A quiescent cell seeing excited in-neighbors adopts the minimal incoming
// weight as a countdown (canonical tie-break), counts down to zero, fires
// for exactly one step and then stays done. A cheaper excited neighbor
// appearing mid-countdown restarts the countdown and repoints the cell.
class WaveConfiguration {
 public:
  WaveConfiguration(const WeightedLattice& lat, std::span<const CellCoord> sources);

  const WeightedLattice& lattice() const { return *lat_; }
  int step_count() const { return step_; }
  const WaveCell& cell(CellCoord c) const { return cells_[lat_->index(c)]; }
  const std::vector<WaveCell>& cells() const { return cells_; }

  void step();

  // No excited and no countdown cells: nothing can ever change again.
  bool frozen() const;

  PointerField pointers() const;

 private:
  const WeightedLattice* lat_;
  std::vector<WaveCell> cells_;
  std::vector<WaveCell> next_;
  int step_ = 0;
};

int default_max_steps(const WeightedLattice& lat);

struct S3dspResult {
  std::vector<CellCoord> path;  // source first, dest last
  int raw_cost = 0;             // sum of traversed edge weights
  int arrival_step = 0;         // step at which dest became excited
  int steps_total = 0;
};

using FrameHook = std::function<void(const WaveConfiguration&)>;

// Runs until dest fires, the lattice freezes (nullopt) or max_steps is hit
// (StepLimit). max_steps < 0 selects the default budget.
std::optional<S3dspResult> run_s3dsp(const WeightedLattice& lat, CellCoord source,
                                     CellCoord dest, int max_steps = -1,
                                     const FrameHook& hook = {});

struct S3pResult {
  PointerField pointers;
  std::vector<int> arrival;  // per-cell step of excitation, -1 if never reached
  int steps_total = 0;
};

// Runs until the lattice freezes; the pointer field then encodes a
// shortest-path tree rooted at the source.
S3pResult run_s3p(const WeightedLattice& lat, CellCoord source, int max_steps = -1,
                  const FrameHook& hook = {});

// One S3P per cell, source order row-major.
std::vector<S3pResult> run_apsp(const WeightedLattice& lat, int max_steps = -1);

// Follows reversed pointers dest -> source and returns the path in
// source-to-dest order. dest == source yields the single-cell path.
std::vector<CellCoord> backtrack(const PointerField& pointers, CellCoord source,
                                 CellCoord dest);

// Sum of lattice edge weights along a backtracked path.
int path_raw_cost(const WeightedLattice& lat, const std::vector<CellCoord>& path);

}  // namespace casp::wave
