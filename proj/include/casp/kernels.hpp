#pragma once

#include <array>
#include <optional>
#include <string>

namespace casp::kernels {

// Data-parallel inner loops of the physarum field updates. Every kernel has
// a scalar reference implementation and an AVX2 variant selected at
// runtime; the variants are bit-for-bit equivalent (same per-lane operation
// sequence, no FMA contraction), so backend choice never changes results.
enum class Backend { Scalar, Avx2 };

bool avx2_available();
// Best backend the build and the CPU support.
Backend detect_backend();
// "scalar" or "avx2"; "auto" and "" give nullopt (caller detects).
std::optional<Backend> parse_backend(const std::string& token);
const char* backend_name(Backend b);

// Fields are padded with a one-cell halo ring (open = 0 there), so neighbor
// loads never branch on bounds. Interior cell (r, c) lives at index(r, c).
struct Grid2D {
  int h = 0;
  int w = 0;
  int pitch = 0;  // w + 2

  int plane() const { return (h + 2) * pitch; }
  int index(int r, int c) const { return (r + 1) * pitch + (c + 1); }
};

// Neighbor index offsets in canonical order N, W, S, E, NE, NW, SE, SW.
std::array<int, 8> moore_offsets(int pitch);
// Index of the opposite direction in that order.
std::array<int, 8> opposite_offsets();

// Chemoattractant diffusion on the Moore stencil. Food cells act as a
// clamped source at cmax (both as stencil input and in the output); wall
// cells (open = 0) take no part and stay 0.
void chem_diffuse(Backend b, const Grid2D& g, const double* chem, const double* open,
                  const double* food, double fc, double cmax, double* out);

// Per-direction attraction bias: gain * (chem_nbr - chem), clamped to
// [-1, 1], zeroed across walls. dir8 holds 8 planes of g.plane() doubles in
// canonical direction order.
void dir_update(Backend b, const Grid2D& g, const double* chem, const double* open,
                double gain, double* dir8);

// Mass exchange: outflow to neighbor d at rate fp * (1 + max(dir_d, 0)),
// rates renormalized when their sum would exceed 1 so mass stays
// non-negative. flow8/flow_total are scratch planes; out receives the new
// mass, scaled by (1 - decay).
void phys_flow(Backend b, const Grid2D& g, const double* phys, const double* dir8,
               const double* open, double fp, double decay, double* flow8,
               double* flow_total, double* out);

// Deterministic left-to-right interior sum.
double sum_interior(const Grid2D& g, const double* field);

}  // namespace casp::kernels
