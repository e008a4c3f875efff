#pragma once

#include "s2m/tensor.hpp"

namespace s2m {

// Number of percentile buckets K used to weight the sign direction.
// K=1 degenerates to the plain sign method.
struct StaircaseConfig {
  int staircase_count = 1;

  double percentile_interval() const {  // tau, in percent units
    return 100.0 / staircase_count;
  }
  bool operator==(const StaircaseConfig&) const = default;
};

struct StaircaseWeights {
  Tensor weights;  // same shape as the source gradient
  StaircaseConfig config;
  // Upper bucket boundaries: percentile of |G| at tau, 2*tau, ..., 100.
  std::vector<double> thresholds;
};

// Bucket the gradient magnitudes into K percentile segments and assign the
// unit in segment k (counting from the smallest magnitudes) weight (2k+1)/K.
// A magnitude equal to a bucket boundary belongs to the lower bucket.
StaircaseWeights staircase_weights(const Tensor& grad, StaircaseConfig cfg);

// sign(G) * W, elementwise; entries lie in [-(2-1/K), 2-1/K] and zeros of G
// stay zero.
Tensor staircase_sign(const Tensor& grad, StaircaseConfig cfg);

// Plain sign baseline; identical to staircase_sign with K=1.
Tensor sign_method(const Tensor& grad);

}  // namespace s2m
