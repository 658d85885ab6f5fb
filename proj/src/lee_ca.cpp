#include "casp/lee_ca.hpp"

#include <algorithm>

#include "casp/errors.hpp"

namespace casp::lee {

bool is_wave(State s) { return s >= State::WaveUp && s <= State::WaveRight; }

bool is_path(State s) { return s >= State::PathUp && s <= State::PathRight; }

State wave_to_path(State s) {
  return static_cast<State>(static_cast<int>(s) + 4);
}

Dir mark_dir(State s) {
  switch (s) {
    case State::WaveUp:
    case State::PathUp: return Dir::N;
    case State::WaveDown:
    case State::PathDown: return Dir::S;
    case State::WaveLeft:
    case State::PathLeft: return Dir::W;
    case State::WaveRight:
    case State::PathRight: return Dir::E;
    default: throw InvalidPath("state carries no direction");
  }
}

State wave_toward(Dir d) {
  switch (d) {
    case Dir::N: return State::WaveUp;
    case Dir::W: return State::WaveLeft;
    case Dir::S: return State::WaveDown;
    case Dir::E: return State::WaveRight;
    default: throw InvalidPath("wave marks are 4-directional");
  }
}

LeeGrid::LeeGrid(int height, int width)
    : height_(height), width_(width),
      cells_(static_cast<size_t>(height) * width, State::Free), next_(cells_) {
  if (height < 1 || width < 1) throw ParseError("grid dimensions must be >= 1");
}

LeeGrid LeeGrid::from_maze(const MazeGrid& maze) {
  LeeGrid grid(maze.height(), maze.width());
  int starts = 0, ends = 0;
  for (int r = 0; r < maze.height(); ++r) {
    for (int c = 0; c < maze.width(); ++c) {
      switch (maze.at({r, c})) {
        case CellKind::Wall: grid.set({r, c}, State::Obstacle); break;
        case CellKind::Source:
          grid.set({r, c}, State::Start);
          ++starts;
          break;
        case CellKind::Dest:
          grid.set({r, c}, State::End);
          ++ends;
          break;
        default: break;  // Free and Food route as free space
      }
    }
  }
  if (starts != 1 || ends != 1)
    throw ParseError("lee grid needs exactly one start and one end");
  return grid;
}

void LeeGrid::step() {
  const int h = height_;
  const int w = width_;

  auto state_at = [&](CellCoord c) { return cells_[index(c)]; };

  // End cells hand the first path mark to exactly one wave neighbor: the
  // canonical-first one, and only while no path has formed next to them and
  // the trivial start-adjacent route does not apply.
  auto end_selects = [&](CellCoord cell) -> bool {
    for (const auto& [d, nb] : neighbors(cell, Scheme::vonNeumann4, h, w)) {
      const State ns = state_at(nb);
      if (ns != State::End) continue;
      bool blocked = false;
      CellCoord selected{-1, -1};
      for (const auto& [ed, en] : neighbors(nb, Scheme::vonNeumann4, h, w)) {
        const State es = state_at(en);
        if (is_path(es) || es == State::Start || es == State::Ready) {
          blocked = true;
          break;
        }
        if (is_wave(es) && selected.row < 0) selected = en;
      }
      if (!blocked && selected == cell) return true;
    }
    return false;
  };

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const CellCoord cell{r, c};
      const State cur = state_at(cell);
      State out = cur;

      switch (cur) {
        case State::Obstacle:
        case State::End:
        case State::Ready:
        case State::PathUp:
        case State::PathDown:
        case State::PathLeft:
        case State::PathRight:
          break;
        case State::Clear:
          out = State::Free;
          break;
        case State::Start: {
          for (const auto& [d, nb] : neighbors(cell, Scheme::vonNeumann4, h, w)) {
            const State ns = state_at(nb);
            if (ns == State::End ||
                (is_path(ns) && step_toward(nb, mark_dir(ns)) == cell)) {
              out = State::Ready;
              break;
            }
          }
          break;
        }
        case State::Free: {
          for (const auto& [d, nb] : neighbors(cell, Scheme::vonNeumann4, h, w)) {
            const State ns = state_at(nb);
            if (ns == State::Start || is_wave(ns)) {
              out = wave_toward(d);
              break;
            }
          }
          break;
        }
        default: {  // wave marks
          bool to_path = false;
          bool to_clear = false;
          for (const auto& [d, nb] : neighbors(cell, Scheme::vonNeumann4, h, w)) {
            const State ns = state_at(nb);
            if (is_path(ns)) {
              if (step_toward(nb, mark_dir(ns)) == cell)
                to_path = true;
              else
                to_clear = true;
            } else if (ns == State::Clear || ns == State::Ready) {
              to_clear = true;
            }
          }
          if (!to_path && end_selects(cell)) to_path = true;
          if (to_path)
            out = wave_to_path(cur);
          else if (to_clear)
            out = State::Clear;
          break;
        }
      }
      next_[index(cell)] = out;
    }
  }

  fixed_point_ = std::equal(cells_.begin(), cells_.end(), next_.begin());
  cells_.swap(next_);
  ++step_;
}

bool LeeGrid::has_state(State s) const {
  return std::find(cells_.begin(), cells_.end(), s) != cells_.end();
}

bool LeeGrid::routed_and_clean() const {
  bool ready = false;
  for (const State s : cells_) {
    if (s == State::Clear || is_wave(s)) return false;
    if (s == State::Ready) ready = true;
  }
  return ready;
}

namespace {

std::vector<CellCoord> extract_route(const LeeGrid& grid) {
  const int h = grid.height();
  const int w = grid.width();
  CellCoord end{-1, -1};
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      if (grid.at({r, c}) == State::End) end = {r, c};

  // Chain head: the path cell next to the end that no other path points at.
  CellCoord head{-1, -1};
  for (const auto& [d, nb] : neighbors(end, Scheme::vonNeumann4, h, w)) {
    if (!is_path(grid.at(nb))) continue;
    bool pointed_at = false;
    for (const auto& [pd, pn] : neighbors(nb, Scheme::vonNeumann4, h, w)) {
      const State ps = grid.at(pn);
      if (is_path(ps) && step_toward(pn, mark_dir(ps)) == nb) pointed_at = true;
    }
    if (!pointed_at) {
      head = nb;
      break;
    }
  }

  std::vector<CellCoord> reversed{end};
  if (head.row < 0) {
    // No chain: the trivial start-adjacent route.
    for (const auto& [d, nb] : neighbors(end, Scheme::vonNeumann4, h, w))
      if (grid.at(nb) == State::Ready) {
        reversed.push_back(nb);
        break;
      }
    if (reversed.size() != 2) throw CorruptPointerField("route extraction found no chain");
  } else {
    CellCoord cur = head;
    const int guard = h * w;
    while (is_path(grid.at(cur))) {
      reversed.push_back(cur);
      if (static_cast<int>(reversed.size()) > guard)
        throw CorruptPointerField("path marks form a cycle");
      cur = step_toward(cur, mark_dir(grid.at(cur)));
    }
    if (grid.at(cur) != State::Ready)
      throw CorruptPointerField("path chain does not end at the start");
    reversed.push_back(cur);
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

}  // namespace

LeeRunOutput lee_route(LeeGrid grid, int max_steps, const FrameHook& hook) {
  if (max_steps < 0) max_steps = 4 * grid.height() * grid.width();

  int steps_ready = -1;
  if (hook) hook(grid);
  while (grid.step_count() < max_steps) {
    grid.step();
    if (hook) hook(grid);
    if (steps_ready < 0 && grid.has_state(State::Ready)) steps_ready = grid.step_count();
    if (grid.routed_and_clean()) {
      LeeRouteResult result;
      result.steps_ready = steps_ready;
      result.steps_clean = grid.step_count();
      result.path = extract_route(grid);
      result.cost = static_cast<int>(result.path.size()) - 1;
      const int steps = grid.step_count();
      return {result, std::move(grid), steps};
    }
    if (grid.at_fixed_point()) {
      const int steps = grid.step_count();
      return {std::nullopt, std::move(grid), steps};
    }
  }
  throw StepLimit("lee run exceeded " + std::to_string(max_steps) + " steps");
}

}  // namespace casp::lee
