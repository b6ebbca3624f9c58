#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <vector>

#include "swipt/rng.hpp"

// Channel model for a chain of K+1 hops: deterministic distance-based
// large-scale gains combined with seeded Rayleigh small-scale fading,
// optionally degraded by channel-estimation error.
namespace swipt {

// Geometry of one hop; the large-scale power gain is
// xi = attenuation * (distance / ref_distance)^-pathloss_exponent.
struct HopGeometry {
  double distance_m = 2.0;
  double ref_distance_m = 1.0;
  double pathloss_exponent = 3.0;
  double attenuation = 0.1;  // linear power gain at the reference distance
};

// One small-scale fading realization. true_gain is |h~|^2 of the channel
// that is physically present; estimated_gain is |h^|^2 of the coefficient
// the transmitter believes in. They coincide when the estimation error
// variance is zero.
struct FadingDraw {
  double true_gain = 0.0;
  double estimated_gain = 0.0;
  std::uint64_t seed_tag = 0;  // stream state that produced the draw
};

// Per-hop |h_k|^2 = xi_k * |h~_k|^2 and the cumulative products
// Gamma_k = prod_{j<=k} beta_j |h_j|^2 (Gamma_0 = 1, not stored).
struct ChannelState {
  Eigen::ArrayXd hop_gains;         // size K+1, entry i is hop i+1
  Eigen::ArrayXd cumulative_gains;  // size K+1, entry i is Gamma_{i+1}

  Eigen::Index hops() const { return hop_gains.size(); }
};

// xi = C * (d/d0)^-alpha. Throws std::domain_error on nonpositive
// distances or nonpositive attenuation.
double large_scale_gain(const HopGeometry& geom);

// `count` unit-variance complex coefficients h~ ~ CN(0,1) from the stream
// addressed by `key`. Same key, same sequence, bit for bit.
std::vector<std::complex<double>> sample_coefficients(std::size_t count, rng::StreamKey key);

// Rayleigh draws with perfect estimation: estimated_gain == true_gain.
std::vector<FadingDraw> sample_small_scale(std::size_t count, rng::StreamKey key);

// Degrades a stream of true coefficients into (estimated, true) pairs.
// The estimate is drawn from the law of h^ given h~ under the model
// h~ = h^ + e with h^ ~ CN(0, 1 - error_variance), e ~ CN(0, error_variance)
// independent; marginals and the joint are exactly that model's, and
// error_variance = 0 returns the true coefficient unchanged. The fresh
// randomness comes from `noise_key`.
// Throws std::domain_error unless 0 <= error_variance < 1.
std::vector<FadingDraw> apply_estimation_error(const std::vector<std::complex<double>>& true_coeffs,
                                               double error_variance, rng::StreamKey noise_key);

// Combines large-scale gains, conversion efficiencies and fading draws
// into hop gains and the Gamma recurrence. All three inputs must have
// equal length K+1 (throws std::invalid_argument otherwise); the last
// beta entry is the destination's and must be 1.
// With use_estimated set, the estimated gains are used instead of the
// true ones (for allocations computed under imperfect CSI).
ChannelState build_channel_state(const std::vector<HopGeometry>& geometries,
                                 const Eigen::ArrayXd& betas, const std::vector<FadingDraw>& fading,
                                 bool use_estimated = false);

// Same combination from raw small-scale power gains.
ChannelState build_channel_state(const std::vector<HopGeometry>& geometries,
                                 const Eigen::ArrayXd& betas, const Eigen::ArrayXd& small_scale_gains);

}  // namespace swipt
