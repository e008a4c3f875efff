#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <vector>

namespace s2m {

namespace detail {

inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Marsaglia-Tsang ziggurat tables for the standard normal, 128 layers,
// 51-bit mantissa draws.
struct ZigguratTables {
  uint64_t kn[128];
  double wn[128];
  double fn[128];
  ZigguratTables() {
    const double m1 = 2251799813685248.0;  // 2^51
    double dn = 3.442619855899;
    double tn = dn;
    const double vn = 9.91256303526217e-3;
    const double q = vn / std::exp(-0.5 * dn * dn);
    kn[0] = static_cast<uint64_t>((dn / q) * m1);
    kn[1] = 0;
    wn[0] = q / m1;
    wn[127] = dn / m1;
    fn[0] = 1.0;
    fn[127] = std::exp(-0.5 * dn * dn);
    for (int i = 126; i >= 1; --i) {
      dn = std::sqrt(-2.0 * std::log(vn / dn + std::exp(-0.5 * dn * dn)));
      kn[i + 1] = static_cast<uint64_t>((dn / tn) * m1);
      tn = dn;
      fn[i] = std::exp(-0.5 * dn * dn);
      wn[i] = dn / m1;
    }
  }
};

inline const ZigguratTables& ziggurat() {
  static const ZigguratTables tables;
  return tables;
}

inline double flip_sign_if(double x, uint64_t flag_bit) {
  // flag_bit is 0 or 1; branchless to keep the normal sampler's throughput
  // independent of the (random) sign.
  uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  bits ^= flag_bit << 63;
  std::memcpy(&x, &bits, sizeof x);
  return x;
}

}  // namespace detail

// Deterministic splitmix64-based generator. All randomness in the project
// flows through this type so runs are reproducible from config seeds alone.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  // Independent stream for a subtask; stable given (state seed, salt).
  Rng derive(uint64_t salt) const {
    return Rng(detail::mix64(state_ + 0x9e3779b97f4a7c15ULL * (salt + 1)));
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(state_);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n >= 1.  Rejection keeps it exact.
  uint64_t uniform_below(uint64_t n) {
    const uint64_t limit = n * (UINT64_MAX / n);
    uint64_t u;
    do {
      u = next_u64();
    } while (u >= limit);
    return u % n;
  }

  // Standard normal via the ziggurat method.
  double normal() {
    const auto& z = detail::ziggurat();
    for (;;) {
      const uint64_t u = next_u64();
      const unsigned i = static_cast<unsigned>(u & 127);
      const uint64_t sign_bit = (u >> 7) & 1;
      const uint64_t j = u >> 13;  // 51 bits
      const double x = static_cast<double>(j) * z.wn[i];
      if (j < z.kn[i]) return detail::flip_sign_if(x, sign_bit);
      if (i == 0) {
        const double r = 3.442619855899;
        double xx, yy;
        do {
          xx = -std::log(uniform_open()) / r;
          yy = -std::log(uniform_open());
        } while (yy + yy < xx * xx);
        return detail::flip_sign_if(r + xx, sign_bit);
      }
      if (z.fn[i] + uniform_open() * (z.fn[i - 1] - z.fn[i]) <
          std::exp(-0.5 * x * x))
        return detail::flip_sign_if(x, sign_bit);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  // Uniform in (0, 1); never returns 0 so it is log-safe.
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  uint64_t state_;
};

}  // namespace s2m
