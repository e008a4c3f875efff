#include "s2m/tensor.hpp"

#include <algorithm>
#include <boost/sort/spreadsort/spreadsort.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "s2m/kernels.hpp"

namespace s2m {

namespace {

size_t shape_product(const Shape& shape) {
  size_t n = 1;
  for (size_t d : shape) {
    if (d == 0) throw std::invalid_argument("tensor shape has zero dimension");
    n *= d;
  }
  return shape.empty() ? 0 : n;
}

void require_same_shape(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b))
    throw std::invalid_argument("tensor shape mismatch: " + a.shape_str() +
                                " vs " + b.shape_str());
}

// Interpolated value at percentile p of an ascending-sorted array.
double interpolate_sorted(const std::vector<double>& sorted, double p) {
  const size_t n = sorted.size();
  const double rank = (p / 100.0) * static_cast<double>(n - 1);
  const size_t lo = static_cast<size_t>(rank);
  const double frac = rank - static_cast<double>(lo);
  if (frac == 0.0 || lo + 1 >= n) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

Tensor uninitialized_like(const Tensor& t) {
  return Tensor(t.shape(), std::vector<double>(t.size()));
}

Tensor make_unchecked(Shape shape, std::vector<double> data) {
  return Tensor(std::move(shape), std::move(data));
}

Tensor Tensor::zeros(Shape shape) {
  std::vector<double> data(shape_product(shape), 0.0);
  return Tensor(std::move(shape), std::move(data));
}

Tensor Tensor::full(Shape shape, double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("non-finite tensor value");
  std::vector<double> data(shape_product(shape), value);
  return Tensor(std::move(shape), std::move(data));
}

Tensor Tensor::from(Shape shape, std::vector<double> data) {
  if (shape_product(shape) != data.size())
    throw std::invalid_argument("tensor shape does not match data length");
  if (!kernels::active().all_finite(data.data(), data.size()))
    throw std::invalid_argument("non-finite tensor value");
  return Tensor(std::move(shape), std::move(data));
}

double& Tensor::at(size_t c, size_t h, size_t w) {
  return data_[(c * shape_[1] + h) * shape_[2] + w];
}

double Tensor::at(size_t c, size_t h, size_t w) const {
  return data_[(c * shape_[1] + h) * shape_[2] + w];
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < shape_.size(); ++i)
    os << (i ? "," : "") << shape_[i];
  os << ']';
  return os.str();
}

double percentile(const Tensor& values, double p) {
  const double ps[1] = {p};
  return percentiles(values, ps)[0];
}

std::vector<double> percentiles(const Tensor& values,
                                std::span<const double> ps) {
  if (values.empty()) throw std::invalid_argument("empty tensor");
  for (double p : ps)
    if (!(p >= 0.0 && p <= 100.0))
      throw std::invalid_argument("percentile out of range");
  std::vector<double> sorted(values.data(), values.data() + values.size());
  boost::sort::spreadsort::spreadsort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(ps.size());
  for (double p : ps) out.push_back(interpolate_sorted(sorted, p));
  return out;
}

Tensor abs(const Tensor& t) {
  Tensor out = uninitialized_like(t);
  kernels::active().abs(out.data(), t.data(), t.size());
  return out;
}

Tensor sign(const Tensor& t) {
  Tensor out = uninitialized_like(t);
  kernels::active().sign(out.data(), t.data(), t.size());
  return out;
}

Tensor hadamard(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  Tensor out = uninitialized_like(a);
  kernels::active().mul(out.data(), a.data(), b.data(), a.size());
  return out;
}

Tensor clip_linf(const Tensor& candidate, const Tensor& anchor, double eps) {
  require_same_shape(candidate, anchor);
  if (!(eps >= 0.0)) throw std::invalid_argument("negative clip radius");
  Tensor out = uninitialized_like(candidate);
  kernels::active().clamp_box(out.data(), candidate.data(), anchor.data(), eps,
                              candidate.size());
  return out;
}

Tensor clip_range(const Tensor& t, double lo, double hi) {
  if (lo > hi) throw std::invalid_argument("empty clip range");
  Tensor out = uninitialized_like(t);
  kernels::active().clamp(out.data(), t.data(), lo, hi, t.size());
  return out;
}

Tensor l1_normalize(const Tensor& t) {
  const double norm = l1_norm(t);
  if (norm == 0.0) throw std::invalid_argument("zero L1 norm");
  Tensor out = uninitialized_like(t);
  kernels::active().scale(out.data(), t.data(), 1.0 / norm, t.size());
  return out;
}

double cosine_similarity(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  const auto& k = kernels::active();
  const double na = std::sqrt(k.dot(a.data(), a.data(), a.size()));
  const double nb = std::sqrt(k.dot(b.data(), b.data(), b.size()));
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("undefined cosine");
  return k.dot(a.data(), b.data(), a.size()) / (na * nb);
}

double l1_norm(const Tensor& t) {
  return kernels::active().sum_abs(t.data(), t.size());
}

double l2_norm(const Tensor& t) {
  return std::sqrt(kernels::active().dot(t.data(), t.data(), t.size()));
}

double linf_norm(const Tensor& t) {
  return kernels::active().max_abs(t.data(), t.size());
}

Tensor conv2d_same(const Tensor& t, const Tensor& kernel) {
  if (t.shape().size() != 3)
    throw std::invalid_argument("conv2d_same expects a {C,H,W} tensor");
  if (kernel.shape().size() != 2 || kernel.shape()[0] != kernel.shape()[1])
    throw std::invalid_argument("conv2d_same expects a square kernel");
  const size_t kside = kernel.shape()[0];
  if (kside % 2 == 0) throw std::invalid_argument("kernel side must be odd");
  const size_t channels = t.shape()[0];
  const size_t height = t.shape()[1];
  const size_t width = t.shape()[2];
  if (kside > std::min(height, width))
    throw std::invalid_argument("kernel larger than image");

  const ptrdiff_t pad = static_cast<ptrdiff_t>(kside / 2);
  Tensor out = Tensor::zeros(t.shape());
  const auto& k = kernels::active();

  // Each kernel tap contributes one shifted row-segment axpy per output row.
  for (size_t c = 0; c < channels; ++c) {
    const double* in_plane = t.data() + c * height * width;
    double* out_plane = out.data() + c * height * width;
    for (size_t ky = 0; ky < kside; ++ky) {
      for (size_t kx = 0; kx < kside; ++kx) {
        const double w = kernel[ky * kside + kx];
        if (w == 0.0) continue;
        const ptrdiff_t dy = static_cast<ptrdiff_t>(ky) - pad;
        const ptrdiff_t dx = static_cast<ptrdiff_t>(kx) - pad;
        for (size_t y = 0; y < height; ++y) {
          const ptrdiff_t sy = static_cast<ptrdiff_t>(y) + dy;
          if (sy < 0 || sy >= static_cast<ptrdiff_t>(height)) continue;
          // valid output columns: 0 <= x+dx < width
          const size_t x0 = dx < 0 ? static_cast<size_t>(-dx) : 0;
          const size_t x1 =
              dx > 0 ? width - static_cast<size_t>(dx) : width;
          if (x0 >= x1) continue;
          k.axpy(out_plane + y * width + x0, w,
                 in_plane + static_cast<size_t>(sy) * width + x0 +
                     static_cast<size_t>(dx),
                 x1 - x0);
        }
      }
    }
  }
  return out;
}

}  // namespace s2m
