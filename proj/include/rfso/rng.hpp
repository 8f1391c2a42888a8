#pragma once

// Counter-based random number generation with splittable substreams.
//
// The generator is Philox4x32-10: a keyed bijection of a 128-bit counter.
// Because each output block is a pure function of (key, counter), a
// substream is just a different counter prefix, so any number of streams
// can be derived from one master seed without coordination, and the draw
// sequence of a given stream never depends on scheduling or worker count.
// All sampling transforms below are written out explicitly (no
// std::<distribution> types) so that a fixed seed yields bit-identical
// sequences across standard libraries.

#include <cmath>
#include <cstdint>

namespace rfso::rng {

namespace detail {

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

struct PhiloxBlock {
  std::uint32_t v[4];
};

inline PhiloxBlock philox4x32_10(std::uint64_t key, std::uint64_t ctr_lo,
                                 std::uint64_t ctr_hi) {
  std::uint32_t c0 = static_cast<std::uint32_t>(ctr_lo);
  std::uint32_t c1 = static_cast<std::uint32_t>(ctr_lo >> 32);
  std::uint32_t c2 = static_cast<std::uint32_t>(ctr_hi);
  std::uint32_t c3 = static_cast<std::uint32_t>(ctr_hi >> 32);
  std::uint32_t k0 = static_cast<std::uint32_t>(key);
  std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c0;
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c2;
    const std::uint32_t n0 = static_cast<std::uint32_t>(p1 >> 32) ^ c1 ^ k0;
    const std::uint32_t n1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t n2 = static_cast<std::uint32_t>(p0 >> 32) ^ c3 ^ k1;
    const std::uint32_t n3 = static_cast<std::uint32_t>(p0);
    c0 = n0; c1 = n1; c2 = n2; c3 = n3;
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return PhiloxBlock{{c0, c1, c2, c3}};
}

}  // namespace detail

// One logical stream of draws: (seed, stream) selects the substream, an
// internal block counter advances as values are consumed.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream)
      : key_(seed), stream_(stream) {}

  std::uint64_t next_u64() {
    if (have_half_) {
      have_half_ = false;
      return half_;
    }
    const auto blk = detail::philox4x32_10(key_, block_index_++, stream_);
    half_ = (static_cast<std::uint64_t>(blk.v[2]) << 32) | blk.v[3];
    have_half_ = true;
    return (static_cast<std::uint64_t>(blk.v[0]) << 32) | blk.v[1];
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe under log().
  double uniform_pos() { return 1.0 - uniform(); }

  double exponential(double mean) { return -mean * std::log(uniform_pos()); }

  // Standard normal via Box-Muller (both uniforms consumed every call, no
  // cached spare, so the draw count per call is fixed).
  double normal() {
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double theta = 6.283185307179586476925286766559 * uniform();
    return r * std::cos(theta);
  }

  // Gamma(shape, scale 1) via Marsaglia-Tsang squeeze; shape < 1 handled by
  // the boost Gamma(shape+1) * U^(1/shape).
  double gamma(double shape) {
    if (shape < 1.0) {
      const double u = uniform_pos();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_pos();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Gamma with the given shape normalised to unit mean.
  double gamma_unit_mean(double shape) { return gamma(shape) / shape; }

 private:
  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  std::uint64_t half_ = 0;
  bool have_half_ = false;
};

}  // namespace rfso::rng
