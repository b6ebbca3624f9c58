#pragma once

#include <complex>
#include <cstdint>

// Counter-based random streams. Every stream is addressed by a
// (seed, trial, hop, lane) key, so Monte Carlo trials can be evaluated in
// any order (or in parallel) and still reproduce bit-identical draws.
namespace swipt::rng {

// splitmix64 finalizer; bijective on 64-bit words
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stream address. `lane` separates independent substreams that share the
// same (trial, hop), e.g. the fading draw and the estimation-error draw.
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::uint64_t hop = 0;
  std::uint64_t lane = 0;

  constexpr std::uint64_t state() const {
    std::uint64_t s = mix64(seed);
    s = mix64(s ^ mix64(trial + 0x71C9A33Cull));
    s = mix64(s ^ mix64(hop + 0x2545F491ull));
    s = mix64(s ^ mix64(lane + 0x9E3779B9ull));
    return s;
  }
};

class Stream {
 public:
  explicit Stream(StreamKey key) : state_(key.state()) {}

  std::uint64_t next_u64() { return mix64(state_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

  // uniform on the open interval (0,1); never returns an endpoint so
  // log(u) stays finite
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  // standard complex Gaussian CN(0,1): components N(0, 1/2).
  // |value|^2 is exactly -log(u1), a unit-mean exponential.
  std::complex<double> complex_gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double phi = 2.0 * 3.141592653589793238462643 * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace swipt::rng
