#include <cmath>

#include "s2m/kernels.hpp"

namespace s2m::kernels {
namespace scalar {

namespace {

void abs_(double* dst, const double* src, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = std::fabs(src[i]);
}

void sign_(double* dst, const double* src, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double v = src[i];
    dst[i] = (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
  }
}

void mul_(double* dst, const double* a, const double* b, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void clamp_(double* dst, const double* src, double lo, double hi, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double v = src[i];
    dst[i] = v < lo ? lo : (v > hi ? hi : v);
  }
}

void clamp_box_(double* dst, const double* candidate, const double* anchor,
                double eps, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double lo = anchor[i] - eps;
    const double hi = anchor[i] + eps;
    const double v = candidate[i];
    dst[i] = v < lo ? lo : (v > hi ? hi : v);
  }
}

void axpy_(double* y, double a, const double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_(double* dst, const double* src, double a, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a * src[i];
}

void saxpy_(double* dst, const double* x, double a, const double* d,
            size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = x[i] + a * d[i];
}

void relu_(double* dst, const double* src, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = src[i] > 0.0 ? src[i] : 0.0;
}

void relu_mask_(double* dst, const double* pre, const double* g, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = pre[i] > 0.0 ? g[i] : 0.0;
}

double dot_(const double* a, const double* b, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_(const double* a, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double sum_abs_(const double* a, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += std::fabs(a[i]);
  return acc;
}

double max_abs_(const double* a, size_t n) {
  double m = 0.0;
  for (size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i]));
  return m;
}

bool all_finite_(const double* a, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (!std::isfinite(a[i])) return false;
  return true;
}

}  // namespace

const Ops ops = {abs_,   sign_,  mul_, clamp_, clamp_box_, axpy_,
                 scale_, saxpy_, relu_, relu_mask_, dot_,  sum_,
                 sum_abs_, max_abs_, all_finite_};

}  // namespace scalar

const Ops& scalar_ops() { return scalar::ops; }

}  // namespace s2m::kernels
