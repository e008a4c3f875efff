#include "s2m/staircase.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>
#include <vector>

#include "s2m/kernels.hpp"

namespace s2m {

namespace {

void require_valid(const Tensor& grad, const StaircaseConfig& cfg) {
  if (grad.empty()) throw std::invalid_argument("empty tensor");
  if (cfg.staircase_count < 1)
    throw std::invalid_argument("staircase count must be >= 1");
}

}  // namespace

StaircaseWeights staircase_weights(const Tensor& grad, StaircaseConfig cfg) {
  require_valid(grad, cfg);
  const size_t k_count = static_cast<size_t>(cfg.staircase_count);
  const Tensor magnitude = abs(grad);

  // Upper boundaries at p = tau, 2*tau, ..., 100 (computed as 100*j/K so the
  // endpoint is exactly 100).
  std::vector<double> ps(k_count);
  for (size_t j = 0; j < k_count; ++j)
    ps[j] = 100.0 * static_cast<double>(j + 1) / cfg.staircase_count;
  std::vector<double> thresholds = percentiles(magnitude, ps);

  std::vector<double> weight_of_bucket(k_count);
  for (size_t j = 0; j < k_count; ++j)
    weight_of_bucket[j] =
        (2.0 * static_cast<double>(j) + 1.0) / cfg.staircase_count;

  // Pad the boundary array to a power of two so the per-unit search is a
  // fixed sequence of branchless steps.
  size_t padded = 1;
  while (padded < k_count) padded <<= 1;
  std::vector<double> bounds(padded, std::numeric_limits<double>::infinity());
  for (size_t j = 0; j < k_count; ++j) bounds[j] = thresholds[j];

  Tensor weights = uninitialized_like(grad);
  const double* mag = magnitude.data();
  double* out = weights.data();
  const size_t n = grad.size();
  for (size_t i = 0; i < n; ++i) {
    const double v = mag[i];
    // first bucket j with v <= bounds[j]; ties therefore go low
    size_t idx = 0;
    for (size_t step = padded >> 1; step > 0; step >>= 1)
      idx += (bounds[idx + step - 1] < v) ? step : 0;
    assert(idx < k_count);
    out[i] = weight_of_bucket[idx];
  }
  return {std::move(weights), cfg, std::move(thresholds)};
}

Tensor staircase_sign(const Tensor& grad, StaircaseConfig cfg) {
  require_valid(grad, cfg);
  if (cfg.staircase_count == 1) return sign(grad);
  return hadamard(sign(grad), staircase_weights(grad, cfg).weights);
}

Tensor sign_method(const Tensor& grad) { return sign(grad); }

}  // namespace s2m
