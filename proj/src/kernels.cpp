#include "casp/kernels.hpp"

#include "kernels_detail.hpp"

namespace casp::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return detail::avx2_compiled() && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect_backend() { return avx2_available() ? Backend::Avx2 : Backend::Scalar; }

std::optional<Backend> parse_backend(const std::string& token) {
  if (token == "scalar") return Backend::Scalar;
  if (token == "avx2") return Backend::Avx2;
  return std::nullopt;
}

const char* backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

std::array<int, 8> moore_offsets(int pitch) {
  return {-pitch, -1, pitch, 1, -pitch + 1, -pitch - 1, pitch + 1, pitch - 1};
}

std::array<int, 8> opposite_offsets() { return {2, 3, 0, 1, 7, 6, 5, 4}; }

void chem_diffuse(Backend b, const Grid2D& g, const double* chem, const double* open,
                  const double* food, double fc, double cmax, double* out) {
  if (b == Backend::Avx2)
    detail::chem_diffuse_avx2(g, chem, open, food, fc, cmax, out);
  else
    detail::chem_diffuse_scalar(g, chem, open, food, fc, cmax, out);
}

void dir_update(Backend b, const Grid2D& g, const double* chem, const double* open,
                double gain, double* dir8) {
  if (b == Backend::Avx2)
    detail::dir_update_avx2(g, chem, open, gain, dir8);
  else
    detail::dir_update_scalar(g, chem, open, gain, dir8);
}

void phys_flow(Backend b, const Grid2D& g, const double* phys, const double* dir8,
               const double* open, double fp, double decay, double* flow8,
               double* flow_total, double* out) {
  if (b == Backend::Avx2)
    detail::phys_flow_avx2(g, phys, dir8, open, fp, decay, flow8, flow_total, out);
  else
    detail::phys_flow_scalar(g, phys, dir8, open, fp, decay, flow8, flow_total, out);
}

double sum_interior(const Grid2D& g, const double* field) {
  double total = 0.0;
  for (int r = 0; r < g.h; ++r) {
    const int row = g.index(r, 0);
    for (int c = 0; c < g.w; ++c) total += field[row + c];
  }
  return total;
}

}  // namespace casp::kernels
