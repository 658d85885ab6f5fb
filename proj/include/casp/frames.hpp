#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casp/lee_ca.hpp"
#include "casp/physarum.hpp"
#include "casp/wave_ca.hpp"

namespace casp::frames {

// ASCII frame glyphs: wave cells print the bullet for quiescent, the
// countdown digit, '+' for excited and '-' for done; lee grids print arrows
// for wave marks, U/D/L/R for path marks, the bullet for clear and R for
// ready. Output is deterministic byte-for-byte.
std::string ascii_frame(const wave::WaveConfiguration& cfg);
std::string ascii_frame(const lee::LeeGrid& grid);
// Mass rendered as a density ramp, walls '#', pseudo tube '@'.
std::string ascii_frame(const phys::Field& field);

// Binary P5, one byte per cell.
std::vector<std::uint8_t> pgm_frame(const wave::WaveConfiguration& cfg);
std::vector<std::uint8_t> pgm_frame(const lee::LeeGrid& grid);
// Mass normalized to the current maximum.
std::vector<std::uint8_t> pgm_frame(const phys::Field& field);
// 255 where the tube runs, 0 elsewhere.
std::vector<std::uint8_t> pgm_pseudo_overlay(const phys::Field& field);

void write_file(const std::string& path, const std::string& text);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace casp::frames
