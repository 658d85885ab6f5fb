#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "casp/errors.hpp"
#include "casp/grid.hpp"
#include "test_util.hpp"

using namespace casp;

TEST_CASE("parse_maze maps glyphs to cell kinds") {
  const MazeGrid maze = parse_maze("S.\n.E\n");
  CHECK(maze.height() == 2);
  CHECK(maze.width() == 2);
  CHECK(maze.at({0, 0}) == CellKind::Source);
  CHECK(maze.at({0, 1}) == CellKind::Free);
  CHECK(maze.at({1, 0}) == CellKind::Free);
  CHECK(maze.at({1, 1}) == CellKind::Dest);
}

TEST_CASE("parse_maze handles walls and food") {
  const MazeGrid maze = parse_maze("S#E");
  CHECK(maze.height() == 1);
  CHECK(maze.width() == 3);
  CHECK(maze.at({0, 1}) == CellKind::Wall);

  const MazeGrid fed = parse_maze("SF");
  CHECK(fed.at({0, 1}) == CellKind::Food);
}

TEST_CASE("parse_maze rejects bad input") {
  CHECK_THROWS_AS(parse_maze("S.\n.E.\n"), ParseError);
  CHECK_THROWS_AS(parse_maze("S?\n.E\n"), ParseError);
  CHECK_THROWS_AS(parse_maze(""), ParseError);
}

TEST_CASE("maze round-trip reproduces the text") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<int> dim(1, 9);
    const int h = dim(rng);
    const int w = dim(rng);
    const MazeGrid maze = testutil::random_maze(h, w, 0.3, {0, 0}, {h - 1, w - 1}, rng);
    const std::string text = serialize(maze);
    CHECK(serialize(parse_maze(text)) == text);
  }
}

TEST_CASE("neighbors at a corner in canonical order") {
  const auto ns = neighbors({0, 0}, Scheme::vonNeumann4, 3, 3);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0].first == Dir::S);
  CHECK(ns[0].second == CellCoord{1, 0});
  CHECK(ns[1].first == Dir::E);
  CHECK(ns[1].second == CellCoord{0, 1});
}

TEST_CASE("interior neighbor counts") {
  CHECK(neighbors({1, 1}, Scheme::vonNeumann4, 3, 3).size() == 4);
  CHECK(neighbors({1, 1}, Scheme::moore8, 3, 3).size() == 8);
}

TEST_CASE("neighbors order is N W S E then diagonals") {
  const auto ns = neighbors({1, 1}, Scheme::moore8, 3, 3);
  REQUIRE(ns.size() == 8);
  CHECK(ns[0].first == Dir::N);
  CHECK(ns[1].first == Dir::W);
  CHECK(ns[2].first == Dir::S);
  CHECK(ns[3].first == Dir::E);
  CHECK(ns[4].first == Dir::NE);
  CHECK(ns[5].first == Dir::NW);
  CHECK(ns[6].first == Dir::SE);
  CHECK(ns[7].first == Dir::SW);
}

TEST_CASE("neighbors symmetry under direction reversal") {
  for (const Scheme scheme : {Scheme::vonNeumann4, Scheme::moore8}) {
    for (int r = 0; r < 5; ++r) {
      for (int c = 0; c < 4; ++c) {
        for (const auto& [d, nb] : neighbors({r, c}, scheme, 5, 4)) {
          const auto back = neighbors(nb, scheme, 5, 4);
          bool found = false;
          for (const auto& [bd, bc] : back)
            if (bd == opposite(d) && bc == CellCoord{r, c}) found = true;
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("neighbors never leave the lattice") {
  for (const Scheme scheme : {Scheme::vonNeumann4, Scheme::moore8})
    for (int h = 1; h <= 8; ++h)
      for (int w = 1; w <= 8; ++w)
        for (int r = 0; r < h; ++r)
          for (int c = 0; c < w; ++c)
            for (const auto& [d, nb] : neighbors({r, c}, scheme, h, w))
              CHECK(in_bounds(nb, h, w));
}

TEST_CASE("parse_weighted_lattice single finite edge") {
  // Edge (0,0) -> (0,1): stored at cell (0,1) in direction W.
  const std::string text =
      "1 2 vonNeumann4 3\n"
      "0 0 inf inf inf inf\n"
      "0 1 inf 0 inf inf\n";
  const WeightedLattice lat = parse_weighted_lattice(text);
  CHECK(lat.weight_in({0, 1}, Dir::W) == 0);
  CHECK(lat.weight_in({0, 0}, Dir::E) == kNoEdge);
  int finite = 0;
  for (int r = 0; r < lat.height(); ++r)
    for (int c = 0; c < lat.width(); ++c)
      for (int d = 0; d < 4; ++d)
        if (lat.weight_in({r, c}, static_cast<Dir>(d)) != kNoEdge) ++finite;
  CHECK(finite == 1);
}

TEST_CASE("parse_weighted_lattice validates weights and completeness") {
  CHECK_THROWS_AS(parse_weighted_lattice("1 1 vonNeumann4 2\n0 0 inf inf 5 inf\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_weighted_lattice("1 2 vonNeumann4 2\n0 0 inf inf inf inf\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_weighted_lattice("1 2 vonNeumann4 2\n0 0 inf inf inf\n"),
                  ParseError);
}

TEST_CASE("lattice round-trip") {
  std::mt19937_64 rng(11);
  const WeightedLattice lat = testutil::random_lattice(4, 5, 2, 0.6, rng);
  const std::string text = serialize(lat);
  CHECK(serialize(parse_weighted_lattice(text)) == text);
}

TEST_CASE("set_weight_in rejects out-of-bounds directions") {
  WeightedLattice lat(2, 2, Scheme::vonNeumann4, 3);
  CHECK_THROWS_AS(lat.set_weight_in({0, 0}, Dir::N, 1), ParseError);
  CHECK_NOTHROW(lat.set_weight_in({0, 0}, Dir::S, 1));
}

TEST_CASE("moore8 lattice format carries eight weights per cell") {
  std::mt19937_64 rng(17);
  WeightedLattice lat(3, 3, Scheme::moore8, 4);
  std::uniform_int_distribution<int> weight(0, 4);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (const auto& [d, nb] : neighbors({r, c}, Scheme::moore8, 3, 3))
        lat.set_weight_in({r, c}, d, weight(rng));
  const std::string text = serialize(lat);
  const WeightedLattice back = parse_weighted_lattice(text);
  CHECK(serialize(back) == text);
  CHECK(back.scheme() == Scheme::moore8);
}
