#pragma once

// Raw kernel entry points behind the runtime dispatch in kernels.cpp.
// The scalar versions are the reference semantics; the AVX2 versions must
// stay bit-for-bit equivalent (tests/test_kernels.cpp enforces it).

#include "casp/kernels.hpp"

namespace casp::kernels::detail {

void chem_diffuse_scalar(const Grid2D& g, const double* chem, const double* open,
                         const double* food, double fc, double cmax, double* out);
void dir_update_scalar(const Grid2D& g, const double* chem, const double* open,
                       double gain, double* dir8);
void phys_flow_scalar(const Grid2D& g, const double* phys, const double* dir8,
                      const double* open, double fp, double decay, double* flow8,
                      double* flow_total, double* out);

void chem_diffuse_avx2(const Grid2D& g, const double* chem, const double* open,
                       const double* food, double fc, double cmax, double* out);
void dir_update_avx2(const Grid2D& g, const double* chem, const double* open,
                     double gain, double* dir8);
void phys_flow_avx2(const Grid2D& g, const double* phys, const double* dir8,
                    const double* open, double fp, double decay, double* flow8,
                    double* flow_total, double* out);

bool avx2_compiled();

}  // namespace casp::kernels::detail
