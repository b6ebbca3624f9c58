#include "swipt/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

double large_scale_gain(const HopGeometry& geom) {
  if (geom.distance_m <= 0.0 || geom.ref_distance_m <= 0.0)
    throw std::domain_error("large_scale_gain: distances must be positive");
  if (geom.attenuation <= 0.0) throw std::domain_error("large_scale_gain: attenuation must be positive");
  if (geom.pathloss_exponent < 0.0)
    throw std::domain_error("large_scale_gain: pathloss exponent must be nonnegative");
  return geom.attenuation * std::pow(geom.distance_m / geom.ref_distance_m, -geom.pathloss_exponent);
}

std::vector<std::complex<double>> sample_coefficients(std::size_t count, rng::StreamKey key) {
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    rng::StreamKey draw_key = key;
    draw_key.hop += i;  // one independent stream per hop position
    rng::Stream stream(draw_key);
    coeffs.push_back(stream.complex_gaussian());
  }
  return coeffs;
}

std::vector<FadingDraw> sample_small_scale(std::size_t count, rng::StreamKey key) {
  if (count == 0) throw std::domain_error("sample_small_scale: count must be >= 1");
  const auto coeffs = sample_coefficients(count, key);
  std::vector<FadingDraw> draws(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double gain = std::norm(coeffs[i]);
    rng::StreamKey tag = key;
    tag.hop += i;
    draws[i] = {gain, gain, tag.state()};
  }
  return draws;
}

std::vector<FadingDraw> apply_estimation_error(const std::vector<std::complex<double>>& true_coeffs,
                                               double error_variance, rng::StreamKey noise_key) {
  if (!(error_variance >= 0.0 && error_variance < 1.0))
    throw std::domain_error("apply_estimation_error: error variance must lie in [0,1)");

  std::vector<FadingDraw> draws(true_coeffs.size());
  const double keep = 1.0 - error_variance;
  const double noise_scale = std::sqrt(error_variance * keep);
  for (std::size_t i = 0; i < true_coeffs.size(); ++i) {
    rng::StreamKey draw_key = noise_key;
    draw_key.hop += i;
    const std::complex<double> truth = true_coeffs[i];
    std::complex<double> estimate = truth;
    if (error_variance > 0.0) {
      rng::Stream stream(draw_key);
      estimate = keep * truth + noise_scale * stream.complex_gaussian();
    }
    draws[i] = {std::norm(truth), std::norm(estimate), draw_key.state()};
  }
  return draws;
}

ChannelState build_channel_state(const std::vector<HopGeometry>& geometries,
                                 const Eigen::ArrayXd& betas,
                                 const Eigen::ArrayXd& small_scale_gains) {
  const Eigen::Index n = betas.size();
  if (static_cast<Eigen::Index>(geometries.size()) != n || small_scale_gains.size() != n)
    throw std::invalid_argument("build_channel_state: geometry/beta/fading lengths differ");
  if (n == 0) throw std::invalid_argument("build_channel_state: empty chain");

  ChannelState state;
  state.hop_gains.resize(n);
  state.cumulative_gains.resize(n);
  double gamma = 1.0;  // Gamma_0
  for (Eigen::Index i = 0; i < n; ++i) {
    state.hop_gains[i] = large_scale_gain(geometries[i]) * small_scale_gains[i];
    gamma *= betas[i] * state.hop_gains[i];
    state.cumulative_gains[i] = gamma;
  }
  return state;
}

ChannelState build_channel_state(const std::vector<HopGeometry>& geometries,
                                 const Eigen::ArrayXd& betas, const std::vector<FadingDraw>& fading,
                                 bool use_estimated) {
  Eigen::ArrayXd gains(static_cast<Eigen::Index>(fading.size()));
  for (std::size_t i = 0; i < fading.size(); ++i)
    gains[static_cast<Eigen::Index>(i)] = use_estimated ? fading[i].estimated_gain : fading[i].true_gain;
  return build_channel_state(geometries, betas, gains);
}

}  // namespace swipt
