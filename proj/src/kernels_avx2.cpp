// Compiled with -mavx2 (see src/CMakeLists.txt). Each kernel mirrors the
// scalar reference operation for operation, in the same order and without
// FMA contraction, so every lane rounds exactly like the scalar code.

#include "kernels_detail.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>

namespace casp::kernels::detail {

bool avx2_compiled() { return true; }

void chem_diffuse_avx2(const Grid2D& g, const double* chem, const double* open,
                       const double* food, double fc, double cmax, double* out) {
  const auto off = moore_offsets(g.pitch);
  const __m256d vcmax = _mm256_set1_pd(cmax);
  const __m256d vfc = _mm256_set1_pd(fc);

  for (int r = 0; r < g.h; ++r) {
    const int row = g.index(r, 0);
    int c = 0;
    for (; c + 4 <= g.w; c += 4) {
      const int i = row + c;
      const __m256d ch = _mm256_loadu_pd(chem + i);
      const __m256d fo = _mm256_loadu_pd(food + i);
      const __m256d ce =
          _mm256_add_pd(ch, _mm256_mul_pd(fo, _mm256_sub_pd(vcmax, ch)));
      __m256d acc = _mm256_setzero_pd();
      for (int d = 0; d < 8; ++d) {
        const int j = i + off[d];
        const __m256d chd = _mm256_loadu_pd(chem + j);
        const __m256d fod = _mm256_loadu_pd(food + j);
        const __m256d cd =
            _mm256_add_pd(chd, _mm256_mul_pd(fod, _mm256_sub_pd(vcmax, chd)));
        acc = _mm256_add_pd(
            acc, _mm256_mul_pd(_mm256_loadu_pd(open + j), _mm256_sub_pd(cd, ce)));
      }
      const __m256d val = _mm256_add_pd(ce, _mm256_mul_pd(vfc, acc));
      const __m256d clamped =
          _mm256_add_pd(val, _mm256_mul_pd(fo, _mm256_sub_pd(vcmax, val)));
      _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(open + i), clamped));
    }
    for (; c < g.w; ++c) {  // remainder, scalar formula
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

void dir_update_avx2(const Grid2D& g, const double* chem, const double* open,
                     double gain, double* dir8) {
  const auto off = moore_offsets(g.pitch);
  const int plane = g.plane();
  const __m256d vgain = _mm256_set1_pd(gain);
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vmone = _mm256_set1_pd(-1.0);

  for (int d = 0; d < 8; ++d) {
    double* outp = dir8 + static_cast<long>(d) * plane;
    for (int r = 0; r < g.h; ++r) {
      const int row = g.index(r, 0);
      int c = 0;
      for (; c + 4 <= g.w; c += 4) {
        const int i = row + c;
        const int j = i + off[d];
        const __m256d bias = _mm256_mul_pd(
            vgain, _mm256_sub_pd(_mm256_loadu_pd(chem + j), _mm256_loadu_pd(chem + i)));
        const __m256d clamped = _mm256_min_pd(vone, _mm256_max_pd(vmone, bias));
        const __m256d gate =
            _mm256_mul_pd(_mm256_loadu_pd(open + i), _mm256_loadu_pd(open + j));
        _mm256_storeu_pd(outp + i, _mm256_mul_pd(gate, clamped));
      }
      for (; c < g.w; ++c) {
        const int i = row + c;
        const int j = i + off[d];
        const double bias = gain * (chem[j] - chem[i]);
        outp[i] = open[i] * open[j] * std::min(1.0, std::max(-1.0, bias));
      }
    }
  }
}

void phys_flow_avx2(const Grid2D& g, const double* phys, const double* dir8,
                    const double* open, double fp, double decay, double* flow8,
                    double* flow_total, double* out) {
  const auto off = moore_offsets(g.pitch);
  const auto opp = opposite_offsets();
  const int plane = g.plane();
  const __m256d vfp = _mm256_set1_pd(fp);
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256d vkeep = _mm256_set1_pd(1.0 - decay);

  for (int r = 0; r < g.h; ++r) {
    const int row = g.index(r, 0);
    int c = 0;
    for (; c + 4 <= g.w; c += 4) {
      const int i = row + c;
      __m256d rates[8];
      __m256d sum_r = vzero;
      for (int d = 0; d < 8; ++d) {
        const __m256d bias =
            _mm256_max_pd(_mm256_loadu_pd(dir8 + static_cast<long>(d) * plane + i), vzero);
        const __m256d rate =
            _mm256_mul_pd(_mm256_mul_pd(vfp, _mm256_add_pd(vone, bias)),
                          _mm256_loadu_pd(open + i + off[d]));
        rates[d] = rate;
        sum_r = _mm256_add_pd(sum_r, rate);
      }
      const __m256d scale = _mm256_div_pd(vone, _mm256_max_pd(vone, sum_r));
      const __m256d mass =
          _mm256_mul_pd(_mm256_loadu_pd(phys + i), _mm256_loadu_pd(open + i));
      __m256d total = vzero;
      for (int d = 0; d < 8; ++d) {
        const __m256d f = _mm256_mul_pd(_mm256_mul_pd(mass, rates[d]), scale);
        _mm256_storeu_pd(flow8 + static_cast<long>(d) * plane + i, f);
        total = _mm256_add_pd(total, f);
      }
      _mm256_storeu_pd(flow_total + i, total);
    }
    for (; c < g.w; ++c) {
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

  const double keep = 1.0 - decay;
  for (int r = 0; r < g.h; ++r) {
    const int row = g.index(r, 0);
    int c = 0;
    for (; c + 4 <= g.w; c += 4) {
      const int i = row + c;
      __m256d inflow = vzero;
      for (int d = 0; d < 8; ++d)
        inflow = _mm256_add_pd(
            inflow,
            _mm256_loadu_pd(flow8 + static_cast<long>(opp[d]) * plane + i + off[d]));
      const __m256d kept = _mm256_mul_pd(
          _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(phys + i),
                                      _mm256_loadu_pd(flow_total + i)),
                        inflow),
          vkeep);
      _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(open + i), kept));
    }
    for (; c < g.w; ++c) {
      const int i = row + c;
      double inflow = 0.0;
      for (int d = 0; d < 8; ++d)
        inflow = inflow + flow8[static_cast<long>(opp[d]) * plane + i + off[d]];
      out[i] = open[i] * ((phys[i] - flow_total[i] + inflow) * keep);
    }
  }
}

}  // namespace casp::kernels::detail

#else  // !__AVX2__

#include <stdexcept>

namespace casp::kernels::detail {

bool avx2_compiled() { return false; }

void chem_diffuse_avx2(const Grid2D&, const double*, const double*, const double*,
                       double, double, double*) {
  throw std::logic_error("avx2 kernels not compiled in");
}
void dir_update_avx2(const Grid2D&, const double*, const double*, double, double*) {
  throw std::logic_error("avx2 kernels not compiled in");
}
void phys_flow_avx2(const Grid2D&, const double*, const double*, const double*, double,
                    double, double*, double*, double*) {
  throw std::logic_error("avx2 kernels not compiled in");
}

}  // namespace casp::kernels::detail

#endif
