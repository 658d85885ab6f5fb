#include "casp/grid.hpp"

#include <array>
#include <sstream>

#include "casp/errors.hpp"

namespace casp {

namespace {

constexpr std::array<CellCoord, kMooreDirs> kOffsets = {{
    {-1, 0},   // N
    {0, -1},   // W
    {1, 0},    // S
    {0, 1},    // E
    {-1, 1},   // NE
    {-1, -1},  // NW
    {1, 1},    // SE
    {1, -1},   // SW
}};

constexpr std::array<Dir, kMooreDirs> kOpposite = {
    Dir::S, Dir::E, Dir::N, Dir::W, Dir::SW, Dir::SE, Dir::NW, Dir::NE,
};

constexpr std::array<const char*, kMooreDirs> kDirNames = {
    "N", "W", "S", "E", "NE", "NW", "SE", "SW",
};

}  // namespace

Dir opposite(Dir d) { return kOpposite[static_cast<int>(d)]; }

const char* dir_name(Dir d) { return kDirNames[static_cast<int>(d)]; }

CellCoord dir_offset(Dir d) { return kOffsets[static_cast<int>(d)]; }

CellCoord step_toward(CellCoord c, Dir d) {
  const CellCoord o = dir_offset(d);
  return {c.row + o.row, c.col + o.col};
}

int dir_count(Scheme s) {
  return s == Scheme::vonNeumann4 ? kVonNeumannDirs : kMooreDirs;
}

const char* scheme_name(Scheme s) {
  return s == Scheme::vonNeumann4 ? "vonNeumann4" : "moore8";
}

Scheme parse_scheme(const std::string& token) {
  if (token == "vonNeumann4") return Scheme::vonNeumann4;
  if (token == "moore8") return Scheme::moore8;
  throw ParseError("unknown neighborhood scheme: " + token);
}

bool in_bounds(CellCoord c, int height, int width) {
  return c.row >= 0 && c.row < height && c.col >= 0 && c.col < width;
}

std::vector<std::pair<Dir, CellCoord>> neighbors(CellCoord c, Scheme s, int height,
                                                 int width) {
  std::vector<std::pair<Dir, CellCoord>> out;
  const int k = dir_count(s);
  out.reserve(k);
  for (int d = 0; d < k; ++d) {
    const CellCoord n = step_toward(c, static_cast<Dir>(d));
    if (in_bounds(n, height, width)) out.emplace_back(static_cast<Dir>(d), n);
  }
  return out;
}

WeightedLattice::WeightedLattice(int height, int width, Scheme scheme, int nu)
    : height_(height), width_(width), scheme_(scheme), nu_(nu) {
  if (height < 1 || width < 1) throw ParseError("lattice dimensions must be >= 1");
  if (nu < 0) throw ParseError("nu must be >= 0");
  weights_.assign(static_cast<size_t>(cell_count()) * dir_count(scheme), kNoEdge);
}

int WeightedLattice::weight_in(CellCoord c, Dir d) const {
  const int k = dir_count(scheme_);
  const int di = static_cast<int>(d);
  if (di >= k) return kNoEdge;
  return weights_[static_cast<size_t>(index(c)) * k + di];
}

void WeightedLattice::set_weight_in(CellCoord c, Dir d, int w) {
  const int k = dir_count(scheme_);
  const int di = static_cast<int>(d);
  if (di >= k) throw ParseError("direction outside lattice scheme");
  if (w != kNoEdge) {
    if (w < 0 || w > nu_) throw ParseError("weight outside {0.." + std::to_string(nu_) + "}");
    if (!in_bounds(step_toward(c, d), height_, width_))
      throw ParseError("finite weight on an out-of-bounds direction");
  }
  weights_[static_cast<size_t>(index(c)) * k + di] = w;
}

MazeGrid::MazeGrid(int height, int width, CellKind fill)
    : height_(height), width_(width),
      cells_(static_cast<size_t>(height) * width, fill) {
  if (height < 1 || width < 1) throw ParseError("maze dimensions must be >= 1");
}

std::vector<CellCoord> MazeGrid::find_all(CellKind k) const {
  std::vector<CellCoord> out;
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c)
      if (at({r, c}) == k) out.push_back({r, c});
  return out;
}

namespace {

CellKind kind_from_char(char ch, int row, int col) {
  switch (ch) {
    case '.': return CellKind::Free;
    case '#': return CellKind::Wall;
    case 'S': return CellKind::Source;
    case 'F': return CellKind::Food;
    case 'E': return CellKind::Dest;
    default:
      throw ParseError("unknown maze character '" + std::string(1, ch) + "' at (" +
                       std::to_string(row) + "," + std::to_string(col) + ")");
  }
}

char char_from_kind(CellKind k) {
  switch (k) {
    case CellKind::Free: return '.';
    case CellKind::Wall: return '#';
    case CellKind::Source: return 'S';
    case CellKind::Food: return 'F';
    case CellKind::Dest: return 'E';
  }
  return '?';
}

}  // namespace

MazeGrid parse_maze(const std::string& text) {
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(line);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw ParseError("maze text is empty");

  const int width = static_cast<int>(rows.front().size());
  MazeGrid maze(static_cast<int>(rows.size()), width);
  for (int r = 0; r < maze.height(); ++r) {
    if (static_cast<int>(rows[r].size()) != width)
      throw ParseError("ragged maze row " + std::to_string(r));
    for (int c = 0; c < width; ++c)
      maze.set({r, c}, kind_from_char(rows[r][c], r, c));
  }
  return maze;
}

std::string serialize(const MazeGrid& maze) {
  std::string out;
  out.reserve(static_cast<size_t>(maze.height()) * (maze.width() + 1));
  for (int r = 0; r < maze.height(); ++r) {
    for (int c = 0; c < maze.width(); ++c) out.push_back(char_from_kind(maze.at({r, c})));
    out.push_back('\n');
  }
  return out;
}

WeightedLattice parse_weighted_lattice(const std::string& text) {
  std::istringstream in(text);
  int height = 0, width = 0, nu = 0;
  std::string scheme_token;
  if (!(in >> height >> width >> scheme_token >> nu))
    throw ParseError("lattice header must be \"H W SCHEME NU\"");
  const Scheme scheme = parse_scheme(scheme_token);
  WeightedLattice lat(height, width, scheme, nu);

  const int k = dir_count(scheme);
  std::vector<bool> seen(static_cast<size_t>(lat.cell_count()), false);
  int row = 0, col = 0;
  std::string tok;
  while (in >> row) {
    if (!(in >> col)) throw ParseError("truncated lattice cell line");
    if (!in_bounds({row, col}, height, width))
      throw ParseError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                       ") outside lattice");
    for (int d = 0; d < k; ++d) {
      if (!(in >> tok))
        throw ParseError("missing " + std::string(dir_name(static_cast<Dir>(d))) +
                         " weight for cell (" + std::to_string(row) + "," +
                         std::to_string(col) + ")");
      if (tok == "inf") continue;  // constructor default
      int w = 0;
      try {
        w = std::stoi(tok);
      } catch (const std::exception&) {
        throw ParseError("bad weight token \"" + tok + "\"");
      }
      lat.set_weight_in({row, col}, static_cast<Dir>(d), w);
    }
    seen[static_cast<size_t>(lat.index({row, col}))] = true;
  }
  for (int i = 0; i < lat.cell_count(); ++i)
    if (!seen[static_cast<size_t>(i)])
      throw ParseError("missing weight line for cell (" + std::to_string(i / width) + "," +
                       std::to_string(i % width) + ")");
  return lat;
}

std::string serialize(const WeightedLattice& lat) {
  std::ostringstream out;
  out << lat.height() << ' ' << lat.width() << ' ' << scheme_name(lat.scheme()) << ' '
      << lat.nu() << '\n';
  const int k = dir_count(lat.scheme());
  for (int r = 0; r < lat.height(); ++r) {
    for (int c = 0; c < lat.width(); ++c) {
      out << r << ' ' << c;
      for (int d = 0; d < k; ++d) {
        const int w = lat.weight_in({r, c}, static_cast<Dir>(d));
        if (w == kNoEdge)
          out << " inf";
        else
          out << ' ' << w;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace casp
