#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace casp {

struct CellCoord {
  int row = 0;
  int col = 0;
  auto operator<=>(const CellCoord&) const = default;
};

// Canonical neighbor enumeration order. Every tie-break in the project
// resolves in this order, so it must never be reordered.
enum class Dir : int { N = 0, W = 1, S = 2, E = 3, NE = 4, NW = 5, SE = 6, SW = 7 };

inline constexpr int kVonNeumannDirs = 4;
inline constexpr int kMooreDirs = 8;

Dir opposite(Dir d);
const char* dir_name(Dir d);

// Row/col displacement of direction d, in the cell's own frame.
CellCoord dir_offset(Dir d);
CellCoord step_toward(CellCoord c, Dir d);

enum class Scheme { vonNeumann4, moore8 };

int dir_count(Scheme s);
const char* scheme_name(Scheme s);
Scheme parse_scheme(const std::string& token);

bool in_bounds(CellCoord c, int height, int width);

// In-bounds neighbors of c in canonical order. Out-of-lattice neighbors do
// not exist (null boundary).
std::vector<std::pair<Dir, CellCoord>> neighbors(CellCoord c, Scheme s, int height,
                                                 int width);

// No incoming edge from that direction.
inline constexpr int kNoEdge = std::numeric_limits<int>::max();

// 2-d lattice where every cell stores one incoming edge weight per neighbor
// direction. weight_in(c, d) is the weight of the oriented edge from the
// neighbor at direction d into c; kNoEdge encodes "no edge".
class WeightedLattice {
 public:
  WeightedLattice(int height, int width, Scheme scheme, int nu);

  int height() const { return height_; }
  int width() const { return width_; }
  Scheme scheme() const { return scheme_; }
  int nu() const { return nu_; }
  int cell_count() const { return height_ * width_; }

  int index(CellCoord c) const { return c.row * width_ + c.col; }
  CellCoord coord(int index) const { return {index / width_, index % width_}; }

  int weight_in(CellCoord c, Dir d) const;
  // Validates w <= nu (finite) and that d points at an in-bounds neighbor.
  void set_weight_in(CellCoord c, Dir d, int w);

 private:
  int height_;
  int width_;
  Scheme scheme_;
  int nu_;
  std::vector<int> weights_;  // cell-major, dir_count(scheme) entries per cell
};

enum class CellKind : std::uint8_t { Free, Wall, Source, Food, Dest };

class MazeGrid {
 public:
  MazeGrid(int height, int width, CellKind fill = CellKind::Free);

  int height() const { return height_; }
  int width() const { return width_; }
  int cell_count() const { return height_ * width_; }

  CellKind at(CellCoord c) const { return cells_[c.row * width_ + c.col]; }
  void set(CellCoord c, CellKind k) { cells_[c.row * width_ + c.col] = k; }

  std::vector<CellCoord> find_all(CellKind k) const;

 private:
  int height_;
  int width_;
  std::vector<CellKind> cells_;
};

// Maze text: newline-separated rows of equal length over {., #, S, F, E}.
MazeGrid parse_maze(const std::string& text);
std::string serialize(const MazeGrid& maze);

// Lattice text: header "H W SCHEME NU", then H*W lines
// "row col wN wW wS wE" (8 weights for moore8, canonical order), "inf" for
// no edge. Weights on out-of-bounds directions must be "inf".
WeightedLattice parse_weighted_lattice(const std::string& text);
std::string serialize(const WeightedLattice& lat);

}  // namespace casp
