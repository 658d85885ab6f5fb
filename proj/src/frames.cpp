#include "casp/frames.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "casp/errors.hpp"

namespace casp::frames {

namespace {

char countdown_glyph(int v) {
  if (v >= 0 && v <= 9) return static_cast<char>('0' + v);
  if (v >= 10 && v <= 35) return static_cast<char>('a' + (v - 10));
  return '?';
}

std::string pgm_header(int height, int width) {
  return "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
}

std::vector<std::uint8_t> with_header(int height, int width,
                                      std::vector<std::uint8_t> pixels) {
  const std::string header = pgm_header(height, width);
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), pixels.begin(), pixels.end());
  return out;
}

}  // namespace

std::string ascii_frame(const wave::WaveConfiguration& cfg) {
  const auto& lat = cfg.lattice();
  std::string out;
  for (int r = 0; r < lat.height(); ++r) {
    for (int c = 0; c < lat.width(); ++c) {
      const wave::WaveCell& cell = cfg.cell({r, c});
      switch (cell.phase) {
        case wave::Phase::Quiescent: out += "•"; break;
        case wave::Phase::Countdown: out += countdown_glyph(cell.count); break;
        case wave::Phase::Excited: out += '+'; break;
        case wave::Phase::Done: out += '-'; break;
      }
    }
    out += '\n';
  }
  return out;
}

std::string ascii_frame(const lee::LeeGrid& grid) {
  std::string out;
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      switch (grid.at({r, c})) {
        case lee::State::Free: out += '.'; break;
        case lee::State::Obstacle: out += '#'; break;
        case lee::State::Start: out += 'S'; break;
        case lee::State::End: out += 'E'; break;
        case lee::State::WaveUp: out += "↑"; break;
        case lee::State::WaveDown: out += "↓"; break;
        case lee::State::WaveLeft: out += "←"; break;
        case lee::State::WaveRight: out += "→"; break;
        case lee::State::PathUp: out += 'U'; break;
        case lee::State::PathDown: out += 'D'; break;
        case lee::State::PathLeft: out += 'L'; break;
        case lee::State::PathRight: out += 'R'; break;
        case lee::State::Clear: out += "•"; break;
        case lee::State::Ready: out += 'R'; break;
      }
    }
    out += '\n';
  }
  return out;
}

std::string ascii_frame(const phys::Field& field) {
  static const char ramp[] = " .:-=+*%";
  double max_mass = 0.0;
  for (int r = 0; r < field.height(); ++r)
    for (int c = 0; c < field.width(); ++c)
      max_mass = std::max(max_mass, field.phys_at({r, c}));

  std::string out;
  for (int r = 0; r < field.height(); ++r) {
    for (int c = 0; c < field.width(); ++c) {
      if (field.topology_at({r, c}) == phys::Topology::Wall) {
        out += '#';
      } else if (field.pseudo_at({r, c})) {
        out += '@';
      } else if (max_mass == 0.0) {
        out += ' ';
      } else {
        const int level = static_cast<int>(field.phys_at({r, c}) / max_mass * 7.0);
        out += ramp[std::clamp(level, 0, 7)];
      }
    }
    out += '\n';
  }
  return out;
}

std::vector<std::uint8_t> pgm_frame(const wave::WaveConfiguration& cfg) {
  const auto& lat = cfg.lattice();
  std::vector<std::uint8_t> pixels;
  pixels.reserve(static_cast<size_t>(lat.cell_count()));
  for (int r = 0; r < lat.height(); ++r)
    for (int c = 0; c < lat.width(); ++c) {
      const wave::WaveCell& cell = cfg.cell({r, c});
      switch (cell.phase) {
        case wave::Phase::Quiescent: pixels.push_back(0); break;
        case wave::Phase::Countdown: pixels.push_back(128); break;
        case wave::Phase::Excited: pixels.push_back(255); break;
        case wave::Phase::Done: pixels.push_back(192); break;
      }
    }
  return with_header(lat.height(), lat.width(), std::move(pixels));
}

std::vector<std::uint8_t> pgm_frame(const lee::LeeGrid& grid) {
  std::vector<std::uint8_t> pixels;
  pixels.reserve(static_cast<size_t>(grid.height()) * grid.width());
  for (const lee::State s : grid.cells())
    pixels.push_back(static_cast<std::uint8_t>(static_cast<int>(s) * 18));
  return with_header(grid.height(), grid.width(), std::move(pixels));
}

std::vector<std::uint8_t> pgm_frame(const phys::Field& field) {
  double max_mass = 0.0;
  for (int r = 0; r < field.height(); ++r)
    for (int c = 0; c < field.width(); ++c)
      max_mass = std::max(max_mass, field.phys_at({r, c}));

  std::vector<std::uint8_t> pixels;
  pixels.reserve(static_cast<size_t>(field.height()) * field.width());
  for (int r = 0; r < field.height(); ++r)
    for (int c = 0; c < field.width(); ++c) {
      if (max_mass == 0.0) {
        pixels.push_back(0);
      } else {
        const double level = field.phys_at({r, c}) / max_mass * 255.0;
        pixels.push_back(static_cast<std::uint8_t>(std::lround(level)));
      }
    }
  return with_header(field.height(), field.width(), std::move(pixels));
}

std::vector<std::uint8_t> pgm_pseudo_overlay(const phys::Field& field) {
  std::vector<std::uint8_t> pixels;
  pixels.reserve(static_cast<size_t>(field.height()) * field.width());
  for (int r = 0; r < field.height(); ++r)
    for (int c = 0; c < field.width(); ++c)
      pixels.push_back(field.pseudo_at({r, c}) ? 255 : 0);
  return with_header(field.height(), field.width(), std::move(pixels));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UnsupportedFormat("cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UnsupportedFormat("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace casp::frames
