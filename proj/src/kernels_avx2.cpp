#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <cstring>

#include "s2m/kernels.hpp"

// AVX2 kernel variants.  Elementwise ops mirror the scalar ternaries with
// compare+blend so results are bit-identical even for signed zeros.
// No FMA anywhere: mul and add round separately, as in the scalar path.

namespace s2m::kernels {
namespace avx2 {

namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

void abs_(double* dst, const double* src, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i,
                     _mm256_andnot_pd(kSignMask, _mm256_loadu_pd(src + i)));
  for (; i < n; ++i) dst[i] = std::fabs(src[i]);
}

void sign_(double* dst, const double* src, size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d neg_one = _mm256_set1_pd(-1.0);
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(src + i);
    const __m256d pos = _mm256_and_pd(_mm256_cmp_pd(v, zero, _CMP_GT_OQ), one);
    const __m256d neg =
        _mm256_and_pd(_mm256_cmp_pd(v, zero, _CMP_LT_OQ), neg_one);
    _mm256_storeu_pd(dst + i, _mm256_or_pd(pos, neg));
  }
  for (; i < n; ++i) {
    const double v = src[i];
    dst[i] = (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
  }
}

void mul_(double* dst, const double* a, const double* b, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

inline __m256d clamp_lanes(__m256d v, __m256d lo, __m256d hi) {
  const __m256d below = _mm256_cmp_pd(v, lo, _CMP_LT_OQ);
  const __m256d above = _mm256_cmp_pd(v, hi, _CMP_GT_OQ);
  return _mm256_blendv_pd(_mm256_blendv_pd(v, hi, above), lo, below);
}

void clamp_(double* dst, const double* src, double lo, double hi, size_t n) {
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vhi = _mm256_set1_pd(hi);
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, clamp_lanes(_mm256_loadu_pd(src + i), vlo, vhi));
  for (; i < n; ++i) {
    const double v = src[i];
    dst[i] = v < lo ? lo : (v > hi ? hi : v);
  }
}

void clamp_box_(double* dst, const double* candidate, const double* anchor,
                double eps, size_t n) {
  const __m256d veps = _mm256_set1_pd(eps);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(anchor + i);
    const __m256d lo = _mm256_sub_pd(a, veps);
    const __m256d hi = _mm256_add_pd(a, veps);
    _mm256_storeu_pd(dst + i,
                     clamp_lanes(_mm256_loadu_pd(candidate + i), lo, hi));
  }
  for (; i < n; ++i) {
    const double lo = anchor[i] - eps;
    const double hi = anchor[i] + eps;
    const double v = candidate[i];
    dst[i] = v < lo ? lo : (v > hi ? hi : v);
  }
}

void axpy_(double* y, double a, const double* x, size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        y + i, _mm256_add_pd(_mm256_loadu_pd(y + i),
                             _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_(double* dst, const double* src, double a, size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(va, _mm256_loadu_pd(src + i)));
  for (; i < n; ++i) dst[i] = a * src[i];
}

void saxpy_(double* dst, const double* x, double a, const double* d,
            size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        dst + i, _mm256_add_pd(_mm256_loadu_pd(x + i),
                               _mm256_mul_pd(va, _mm256_loadu_pd(d + i))));
  for (; i < n; ++i) dst[i] = x[i] + a * d[i];
}

void relu_(double* dst, const double* src, size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(src + i);
    _mm256_storeu_pd(dst + i,
                     _mm256_and_pd(v, _mm256_cmp_pd(v, zero, _CMP_GT_OQ)));
  }
  for (; i < n; ++i) dst[i] = src[i] > 0.0 ? src[i] : 0.0;
}

void relu_mask_(double* dst, const double* pre, const double* g, size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mask =
        _mm256_cmp_pd(_mm256_loadu_pd(pre + i), zero, _CMP_GT_OQ);
    _mm256_storeu_pd(dst + i, _mm256_and_pd(_mm256_loadu_pd(g + i), mask));
  }
  for (; i < n; ++i) dst[i] = pre[i] > 0.0 ? g[i] : 0.0;
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_(const double* a, const double* b, size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(
        acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4),
                                             _mm256_loadu_pd(b + i + 4)));
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_add_pd(
        acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_(const double* a, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

double sum_abs_(const double* a, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc,
                        _mm256_andnot_pd(kSignMask, _mm256_loadu_pd(a + i)));
  double s = hsum(acc);
  for (; i < n; ++i) s += std::fabs(a[i]);
  return s;
}

double max_abs_(const double* a, size_t n) {
  __m256d m = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    m = _mm256_max_pd(m, _mm256_andnot_pd(kSignMask, _mm256_loadu_pd(a + i)));
  const __m128d lo = _mm256_castpd256_pd128(m);
  const __m128d hi = _mm256_extractf128_pd(m, 1);
  const __m128d mx = _mm_max_pd(lo, hi);
  double best = _mm_cvtsd_f64(_mm_max_sd(mx, _mm_unpackhi_pd(mx, mx)));
  for (; i < n; ++i) best = std::max(best, std::fabs(a[i]));
  return best;
}

bool all_finite_(const double* a, size_t n) {
  // finite <=> exponent field not all ones
  const __m256i exp_mask = _mm256_set1_epi64x(0x7ff0000000000000LL);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i bits =
        _mm256_castpd_si256(_mm256_loadu_pd(a + i));
    const __m256i masked = _mm256_and_si256(bits, exp_mask);
    const __m256i is_special = _mm256_cmpeq_epi64(masked, exp_mask);
    if (!_mm256_testz_si256(is_special, is_special)) return false;
  }
  for (; i < n; ++i)
    if (!std::isfinite(a[i])) return false;
  return true;
}

}  // namespace

const Ops ops = {abs_,   sign_,  mul_, clamp_, clamp_box_, axpy_,
                 scale_, saxpy_, relu_, relu_mask_, dot_,  sum_,
                 sum_abs_, max_abs_, all_finite_};

}  // namespace avx2
}  // namespace s2m::kernels
