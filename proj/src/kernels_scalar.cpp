#include <algorithm>

#include "kernels_detail.hpp"

namespace casp::kernels::detail {

void chem_diffuse_scalar(const Grid2D& g, const double* chem, const double* open,
                         const double* food, double fc, double cmax, double* out) {
  const auto off = moore_offsets(g.pitch);
  for (int r = 0; r < g.h; ++r) {
    const int row = g.index(r, 0);
    for (int c = 0; c < g.w; ++c) {
      const int i = row + c;
      const double ce = chem[i] + food[i] * (cmax - chem[i]);
      double acc = 0.0;
      for (int d = 0; d < 8; ++d) {
        const int j = i + off[d];
        const double cd = chem[j] + food[j] * (cmax - chem[j]);
        acc = acc + open[j] * (cd - ce);
      }
      const double val = ce + fc * acc;
      out[i] = open[i] * (val + food[i] * (cmax - val));
    }
  }
}

void dir_update_scalar(const Grid2D& g, const double* chem, const double* open,
                       double gain, double* dir8) {
  const auto off = moore_offsets(g.pitch);
  const int plane = g.plane();
  for (int d = 0; d < 8; ++d) {
    double* out = dir8 + static_cast<long>(d) * plane;
    for (int r = 0; r < g.h; ++r) {
      const int row = g.index(r, 0);
      for (int c = 0; c < g.w; ++c) {
        const int i = row + c;
        const int j = i + off[d];
        const double bias = gain * (chem[j] - chem[i]);
        out[i] = open[i] * open[j] * std::min(1.0, std::max(-1.0, bias));
      }
    }
  }
}

void phys_flow_scalar(const Grid2D& g, const double* phys, const double* dir8,
                      const double* open, double fp, double decay, double* flow8,
                      double* flow_total, double* out) {
  const auto off = moore_offsets(g.pitch);
  const auto opp = opposite_offsets();
  const int plane = g.plane();

  // Pass A: per-cell outflows, rates renormalized so they never exceed the
  // cell's mass.
  for (int r = 0; r < g.h; ++r) {
    const int row = g.index(r, 0);
    for (int c = 0; c < g.w; ++c) {
      const int i = row + c;
      double rates[8];
      double sum_r = 0.0;
      for (int d = 0; d < 8; ++d) {
        const double bias = std::max(dir8[static_cast<long>(d) * plane + i], 0.0);
        const double rate = fp * (1.0 + bias) * open[i + off[d]];
        rates[d] = rate;
        sum_r = sum_r + rate;
      }
      const double scale = 1.0 / std::max(1.0, sum_r);
      const double mass = phys[i] * open[i];
      double total = 0.0;
      for (int d = 0; d < 8; ++d) {
        const double f = mass * rates[d] * scale;
        flow8[static_cast<long>(d) * plane + i] = f;
        total = total + f;
      }
      flow_total[i] = total;
    }
  }

  // Pass B: exchange. Inflow from the neighbor at d is its outflow in the
  // opposite direction.
  const double keep = 1.0 - decay;
  for (int r = 0; r < g.h; ++r) {
    const int row = g.index(r, 0);
    for (int c = 0; c < g.w; ++c) {
      const int i = row + c;
      double inflow = 0.0;
      for (int d = 0; d < 8; ++d)
        inflow = inflow + flow8[static_cast<long>(opp[d]) * plane + i + off[d]];
      out[i] = open[i] * ((phys[i] - flow_total[i] + inflow) * keep);
    }
  }
}

}  // namespace casp::kernels::detail
