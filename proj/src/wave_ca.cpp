#include "casp/wave_ca.hpp"

#include <algorithm>

#include "casp/errors.hpp"

namespace casp::wave {

WaveConfiguration::WaveConfiguration(const WeightedLattice& lat,
                                     std::span<const CellCoord> sources)
    : lat_(&lat), cells_(static_cast<size_t>(lat.cell_count())), next_(cells_.size()) {
  for (const CellCoord& s : sources) cells_[lat.index(s)].phase = Phase::Excited;
}

void WaveConfiguration::step() {
  const int h = lat_->height();
  const int w = lat_->width();
  const int k = dir_count(lat_->scheme());

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const CellCoord x{r, c};
      const int i = lat_->index(x);
      const WaveCell& cur = cells_[i];
      WaveCell& out = next_[i];
      out = cur;

      switch (cur.phase) {
        case Phase::Done:
        case Phase::Excited:
          out.phase = Phase::Done;
          break;
        case Phase::Countdown:
          if (cur.count == 0) {
            out.phase = Phase::Excited;
            break;
          }
          [[fallthrough]];
        case Phase::Quiescent: {
          // Minimal finite incoming weight among excited neighbors, first
          // match in canonical order wins.
          int best_w = kNoEdge;
          int best_dir = kNoPointer;
          for (int d = 0; d < k; ++d) {
            const CellCoord y = step_toward(x, static_cast<Dir>(d));
            if (!in_bounds(y, h, w)) continue;
            if (cells_[lat_->index(y)].phase != Phase::Excited) continue;
            const int wxy = lat_->weight_in(x, static_cast<Dir>(d));
            if (wxy == kNoEdge) continue;
            if (wxy < best_w) {
              best_w = wxy;
              best_dir = d;
            }
          }
          if (cur.phase == Phase::Quiescent) {
            if (best_dir != kNoPointer) {
              out.phase = Phase::Countdown;
              out.count = best_w;
              out.pointer = best_dir;
            }
          } else {  // counting down, count > 0
            if (best_dir != kNoPointer && best_w < cur.count) {
              out.count = best_w;
              out.pointer = best_dir;
            } else {
              out.count = cur.count - 1;
            }
          }
          break;
        }
      }
    }
  }
  cells_.swap(next_);
  ++step_;
}

bool WaveConfiguration::frozen() const {
  for (const WaveCell& cell : cells_)
    if (cell.phase == Phase::Excited || cell.phase == Phase::Countdown) return false;
  return true;
}

PointerField WaveConfiguration::pointers() const {
  PointerField field{lat_->height(), lat_->width(), {}};
  field.dir.reserve(cells_.size());
  for (const WaveCell& cell : cells_) field.dir.push_back(cell.pointer);
  return field;
}

int default_max_steps(const WeightedLattice& lat) {
  // Termination bound (nu + 2) * n plus slack.
  return (lat.nu() + 2) * lat.cell_count() + 2;
}

std::optional<S3dspResult> run_s3dsp(const WeightedLattice& lat, CellCoord source,
                                     CellCoord dest, int max_steps,
                                     const FrameHook& hook) {
  if (source == dest) throw InvalidPath("source and dest must differ");
  if (max_steps < 0) max_steps = default_max_steps(lat);

  const CellCoord sources[]{source};
  WaveConfiguration cfg(lat, sources);
  if (hook) hook(cfg);
  while (cfg.step_count() < max_steps) {
    cfg.step();
    if (hook) hook(cfg);
    if (cfg.cell(dest).phase == Phase::Excited) {
      S3dspResult result;
      result.arrival_step = cfg.step_count();
      result.steps_total = cfg.step_count();
      result.path = backtrack(cfg.pointers(), source, dest);
      result.raw_cost = path_raw_cost(lat, result.path);
      return result;
    }
    if (cfg.frozen()) return std::nullopt;
  }
  throw StepLimit("wave run exceeded " + std::to_string(max_steps) + " steps");
}

S3pResult run_s3p(const WeightedLattice& lat, CellCoord source, int max_steps,
                  const FrameHook& hook) {
  if (max_steps < 0) max_steps = default_max_steps(lat);

  const CellCoord sources[]{source};
  WaveConfiguration cfg(lat, sources);
  S3pResult result;
  result.arrival.assign(static_cast<size_t>(lat.cell_count()), -1);
  result.arrival[lat.index(source)] = 0;
  if (hook) hook(cfg);
  while (!cfg.frozen()) {
    if (cfg.step_count() >= max_steps)
      throw StepLimit("wave run exceeded " + std::to_string(max_steps) + " steps");
    cfg.step();
    if (hook) hook(cfg);
    for (int i = 0; i < lat.cell_count(); ++i)
      if (cfg.cells()[i].phase == Phase::Excited && result.arrival[i] < 0)
        result.arrival[i] = cfg.step_count();
  }
  result.pointers = cfg.pointers();
  result.steps_total = cfg.step_count();
  return result;
}

std::vector<S3pResult> run_apsp(const WeightedLattice& lat, int max_steps) {
  std::vector<S3pResult> fields;
  fields.reserve(static_cast<size_t>(lat.cell_count()));
  for (int i = 0; i < lat.cell_count(); ++i)
    fields.push_back(run_s3p(lat, lat.coord(i), max_steps));
  return fields;
}

std::vector<CellCoord> backtrack(const PointerField& pointers, CellCoord source,
                                 CellCoord dest) {
  std::vector<CellCoord> path{dest};
  CellCoord cur = dest;
  const int guard = pointers.height * pointers.width;
  while (cur != source) {
    if (static_cast<int>(path.size()) > guard)
      throw CorruptPointerField("pointer cycle while backtracking");
    const int p = pointers.dir[static_cast<size_t>(cur.row) * pointers.width + cur.col];
    if (p == kNoPointer)
      throw CorruptPointerField("unset pointer before reaching the source");
    cur = step_toward(cur, static_cast<Dir>(p));
    if (!in_bounds(cur, pointers.height, pointers.width))
      throw CorruptPointerField("pointer walked off the lattice");
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int path_raw_cost(const WeightedLattice& lat, const std::vector<CellCoord>& path) {
  int total = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const CellCoord from = path[i];
    const CellCoord to = path[i + 1];
    // Weight sits at the head cell, indexed by the direction pointing back
    // at the tail.
    int w = kNoEdge;
    for (int d = 0; d < dir_count(lat.scheme()); ++d) {
      if (step_toward(to, static_cast<Dir>(d)) == from) {
        w = lat.weight_in(to, static_cast<Dir>(d));
        break;
      }
    }
    if (w == kNoEdge) throw InvalidPath("path step is not a lattice edge");
    total += w;
  }
  return total;
}

}  // namespace casp::wave
