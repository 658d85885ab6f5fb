#include "casp/physarum.hpp"

#include <algorithm>

#include "casp/errors.hpp"

namespace casp::phys {

namespace {

void validate(const Params& p) {
  if (!(p.chem_diffusion > 0.0 && p.chem_diffusion <= 0.125))
    throw ParseError("chem_diffusion must be in (0, 1/8]");
  if (!(p.phys_diffusion > 0.0 && p.phys_diffusion <= 0.125))
    throw ParseError("phys_diffusion must be in (0, 1/8]");
  if (!(p.chem_source_level > 0.0)) throw ParseError("chem_source_level must be > 0");
  if (p.dir_gain < 0.0) throw ParseError("dir_gain must be >= 0");
  if (p.pseudo_mass_floor < 0.0) throw ParseError("pseudo_mass_floor must be >= 0");
  if (p.phys_decay < 0.0 || p.phys_decay >= 1.0)
    throw ParseError("phys_decay must be in [0, 1)");
}

}  // namespace

Field::Field(const MazeGrid& maze, const Params& params, kernels::Backend backend)
    : params_(params), backend_(backend) {
  validate(params);
  grid_ = {maze.height(), maze.width(), maze.width() + 2};
  const size_t plane = static_cast<size_t>(grid_.plane());

  topo_.assign(static_cast<size_t>(grid_.h) * grid_.w, 0);
  pseudo_.assign(topo_.size(), 0);
  chem_.assign(plane, 0.0);
  chem_next_.assign(plane, 0.0);
  phys_.assign(plane, 0.0);
  phys_next_.assign(plane, 0.0);
  open_.assign(plane, 0.0);  // halo ring stays closed
  food_.assign(plane, 0.0);
  dir_.assign(plane * 8, 0.0);
  flow_.assign(plane * 8, 0.0);
  flow_total_.assign(plane, 0.0);

  for (int r = 0; r < grid_.h; ++r) {
    for (int c = 0; c < grid_.w; ++c) {
      const int i = grid_.index(r, c);
      Topology t = Topology::Free;
      switch (maze.at({r, c})) {
        case CellKind::Wall: t = Topology::Wall; break;
        case CellKind::Food: t = Topology::Food; break;
        case CellKind::Source: t = Topology::Origin; break;
        default: break;  // Free and Dest are plain area
      }
      topo_[static_cast<size_t>(r) * grid_.w + c] = static_cast<std::uint8_t>(t);
      if (t != Topology::Wall) open_[i] = 1.0;
      if (t == Topology::Food) {
        food_[i] = 1.0;
        chem_[i] = params_.chem_source_level;
      }
      if (t == Topology::Origin) phys_[i] = params_.initial_mass;
    }
  }
}

Topology Field::topology_at(CellCoord c) const {
  return static_cast<Topology>(topo_[static_cast<size_t>(c.row) * grid_.w + c.col]);
}

double Field::dir_at(CellCoord c, Dir d) const {
  return dir_[static_cast<size_t>(static_cast<int>(d)) * grid_.plane() +
              grid_.index(c.row, c.col)];
}

bool Field::pseudo_at(CellCoord c) const {
  return pseudo_[static_cast<size_t>(c.row) * grid_.w + c.col] != 0;
}

void Field::set_pseudo(CellCoord c, bool on) {
  pseudo_[static_cast<size_t>(c.row) * grid_.w + c.col] = on ? 1 : 0;
}

void Field::chem_step() {
  kernels::chem_diffuse(backend_, grid_, chem_.data(), open_.data(), food_.data(),
                        params_.chem_diffusion, params_.chem_source_level,
                        chem_next_.data());
  chem_.swap(chem_next_);
}

void Field::dir_step() {
  kernels::dir_update(backend_, grid_, chem_.data(), open_.data(), params_.dir_gain,
                      dir_.data());
}

void Field::phys_step() {
  kernels::phys_flow(backend_, grid_, phys_.data(), dir_.data(), open_.data(),
                     params_.phys_diffusion, params_.phys_decay, flow_.data(),
                     flow_total_.data(), phys_next_.data());
  phys_.swap(phys_next_);
}

void Field::step() {
  chem_step();
  dir_step();
  phys_step();
  ++step_;
}

double Field::total_mass() const { return kernels::sum_interior(grid_, phys_.data()); }

std::vector<CellCoord> Field::origin_cells() const {
  std::vector<CellCoord> out;
  for (int r = 0; r < grid_.h; ++r)
    for (int c = 0; c < grid_.w; ++c)
      if (topology_at({r, c}) == Topology::Origin) out.push_back({r, c});
  return out;
}

std::vector<CellCoord> Field::food_cells() const {
  std::vector<CellCoord> out;
  for (int r = 0; r < grid_.h; ++r)
    for (int c = 0; c < grid_.w; ++c)
      if (topology_at({r, c}) == Topology::Food) out.push_back({r, c});
  return out;
}

namespace {

// Max-mass open Moore neighbor, canonical tie-break. {-1,-1} when the
// neighborhood is closed. Skips cells flagged in `blocked` when given.
CellCoord best_neighbor(const Field& field, CellCoord c,
                        const std::vector<std::uint8_t>* blocked = nullptr) {
  CellCoord best{-1, -1};
  double best_mass = -1.0;
  for (const auto& [d, nb] :
       neighbors(c, Scheme::moore8, field.height(), field.width())) {
    if (field.topology_at(nb) == Topology::Wall) continue;
    if (blocked && (*blocked)[static_cast<size_t>(nb.row) * field.width() + nb.col])
      continue;
    const double m = field.phys_at(nb);
    if (m > best_mass) {
      best_mass = m;
      best = nb;
    }
  }
  return best;
}

}  // namespace

bool food_reached(const Field& field, CellCoord food) {
  const CellCoord nb = best_neighbor(field, food);
  if (nb.row < 0) return false;
  return field.phys_at(nb) >= field.params().pseudo_mass_floor;
}

std::optional<std::vector<CellCoord>> try_extract_tube(Field& field, CellCoord food) {
  if (!food_reached(field, food)) return std::nullopt;
  const int budget = field.height() * field.width();

  // The clamped food source piles up mass around itself, so the walk never
  // steps back onto a food cell and never revisits a cell; otherwise it is
  // the plain max-mass ascent.
  std::vector<std::uint8_t> blocked(static_cast<size_t>(field.height()) * field.width(), 0);
  for (const CellCoord& f : field.food_cells())
    blocked[static_cast<size_t>(f.row) * field.width() + f.col] = 1;

  std::vector<CellCoord> tube{food};
  CellCoord cur = food;
  while (field.topology_at(cur) != Topology::Origin) {
    if (static_cast<int>(tube.size()) > budget) return std::nullopt;
    cur = best_neighbor(field, cur, &blocked);
    if (cur.row < 0) return std::nullopt;
    blocked[static_cast<size_t>(cur.row) * field.width() + cur.col] = 1;
    tube.push_back(cur);
  }
  for (const CellCoord& c : tube) field.set_pseudo(c, true);
  return tube;
}

std::vector<CellCoord> extract_tube(Field& field, CellCoord food) {
  auto tube = try_extract_tube(field, food);
  if (!tube)
    throw TubeExtractionFailed("no usable mass gradient from food to origin yet");
  return *tube;
}

std::optional<SolveOutcome> solve_maze(const MazeGrid& maze, const Params& params,
                                       kernels::Backend backend, const FrameHook& hook) {
  Field field(maze, params, backend);
  const std::vector<CellCoord> foods = field.food_cells();
  if (foods.empty() || field.origin_cells().empty())
    throw ParseError("physarum maze needs at least one source and one food cell");

  if (hook) hook(field);
  while (field.step_count() < params.max_steps) {
    field.step();
    if (hook) hook(field);
    for (const CellCoord& food : foods) {
      if (auto tube = try_extract_tube(field, food)) {
        if (hook) hook(field);  // re-emit the final step with the tube marked
        return SolveOutcome{std::move(*tube), field.step_count()};
      }
    }
  }
  return std::nullopt;
}

}  // namespace casp::phys
