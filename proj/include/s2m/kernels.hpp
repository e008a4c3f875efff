#pragma once

#include <cstddef>

namespace s2m::kernels {

// Flat arithmetic primitives the tensor and model layers are built on.
// Scalar implementations are the reference; an AVX2 variant is selected at
// runtime when the CPU supports it.  Elementwise kernels are bit-identical
// across variants (no FMA, same IEEE ops); reductions may differ in
// summation order and are equivalence-tested to a tolerance instead.
struct Ops {
  void (*abs)(double* dst, const double* src, size_t n);
  void (*sign)(double* dst, const double* src, size_t n);
  void (*mul)(double* dst, const double* a, const double* b, size_t n);
  void (*clamp)(double* dst, const double* src, double lo, double hi, size_t n);
  // dst = min(anchor+eps, max(anchor-eps, candidate))
  void (*clamp_box)(double* dst, const double* candidate, const double* anchor,
                    double eps, size_t n);
  void (*axpy)(double* y, double a, const double* x, size_t n);   // y += a*x
  void (*scale)(double* dst, const double* src, double a, size_t n);
  // dst = x + a*d
  void (*saxpy)(double* dst, const double* x, double a, const double* d,
                size_t n);
  void (*relu)(double* dst, const double* src, size_t n);
  // dst = pre > 0 ? g : 0
  void (*relu_mask)(double* dst, const double* pre, const double* g, size_t n);
  double (*dot)(const double* a, const double* b, size_t n);
  double (*sum)(const double* a, size_t n);
  double (*sum_abs)(const double* a, size_t n);
  double (*max_abs)(const double* a, size_t n);
  bool (*all_finite)(const double* a, size_t n);
};

// Active variant: AVX2 when compiled in and supported, unless the
// S2M_KERNELS=scalar environment variable forces the reference path.
const Ops& active();
const char* active_name();

const Ops& scalar_ops();
// Null when the binary was built without AVX2 or the CPU lacks it.
const Ops* avx2_ops();

}  // namespace s2m::kernels
