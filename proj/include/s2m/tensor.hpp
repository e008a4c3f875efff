#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace s2m {

using Shape = std::vector<size_t>;

// Dense row-major tensor of finite 64-bit reals.  Images are {C,H,W};
// gradients and perturbations share the shape of the image they refer to.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, double value);
  // Validates product(shape) == data.size() and that every value is finite.
  static Tensor from(Shape shape, std::vector<double> data);

  const Shape& shape() const { return shape_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<const double> values() const { return data_; }

  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  // {C,H,W} indexing for image-shaped tensors.
  double& at(size_t c, size_t h, size_t w);
  double at(size_t c, size_t h, size_t w) const;

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool operator==(const Tensor& other) const = default;

  std::string shape_str() const;

 private:
  Tensor(Shape shape, std::vector<double> data)
      : shape_(std::move(shape)), data_(std::move(data)) {}

  friend Tensor uninitialized_like(const Tensor&);
  friend Tensor make_unchecked(Shape, std::vector<double>);

  Shape shape_;
  std::vector<double> data_;
};

// Internal constructors for op results whose finiteness follows from their
// inputs; external data must come in through Tensor::from.
Tensor uninitialized_like(const Tensor& t);
Tensor make_unchecked(Shape shape, std::vector<double> data);

// Linear-interpolation percentile of the flattened data, p in [0,100].
double percentile(const Tensor& values, double p);
// Batch version sharing one sorted copy; equivalent to calling percentile
// once per entry.
std::vector<double> percentiles(const Tensor& values,
                                std::span<const double> ps);

Tensor abs(const Tensor& t);
Tensor sign(const Tensor& t);
Tensor hadamard(const Tensor& a, const Tensor& b);
Tensor clip_linf(const Tensor& candidate, const Tensor& anchor, double eps);
Tensor clip_range(const Tensor& t, double lo, double hi);
Tensor l1_normalize(const Tensor& t);
double cosine_similarity(const Tensor& a, const Tensor& b);

double l1_norm(const Tensor& t);
double l2_norm(const Tensor& t);
double linf_norm(const Tensor& t);

// Per-channel 2-D cross-correlation with zero padding; output shape equals
// input shape.  t is {C,H,W}, kernel is {k,k} with odd k <= min(H,W).
Tensor conv2d_same(const Tensor& t, const Tensor& kernel);

}  // namespace s2m
