#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "swipt/network.hpp"

// Closed-form solutions for the power-splitting chain: harvested energy
// and per-hop SNR evaluation, source-power minimization under per-node
// SNR thresholds, max-min rate maximization under a power budget, the
// power<->SNR exchange constant, the fixed-ratio baseline, and the
// homogeneous relay-count estimate.
namespace swipt {

// A cumulative gain is zero (or negative): the chain cannot carry any
// positive SNR and the closed forms divide by Gamma.
struct infeasible_channel_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SnrForm {
  approximate,  // antenna noise neglected against decoder noise
  exact,        // keeps the (1-rho) delta^2 + sigma^2 denominator
};

// w_k = gammabar_k * sigma2_k * beta_k / Gamma_k. E0* is their sum.
Eigen::ArrayXd power_weights(const NetworkConfig& cfg, const ChannelState& channel);

// v_k = sigma2_k * beta_k / Gamma_k. E0 / sum(v) is the common SNR.
Eigen::ArrayXd rate_weights(const NetworkConfig& cfg, const ChannelState& channel);

// The allocation that meets per-hop targets proportional to `weights`
// with equality: rho_k = 1 - w_k / (sum(w) * A_{k-1}), evaluated through
// the suffix sums S_k = sum_{j>=k} w_j (rho_k = S_{k+1}/S_k), which keeps
// every ratio and decode fraction at full relative precision.
PsAllocation allocation_from_weights(const Eigen::ArrayXd& weights);

// Harvested energy E_k = rho_k beta_k |h_k|^2 E_{k-1} at nodes 1..K+1
// (the destination entry is always 0).
Eigen::ArrayXd harvested_energy(double e0, const NetworkConfig& cfg, const ChannelState& channel,
                                const PsAllocation& alloc);

// Received SNR of hop k (1-based, 1..K+1). The approximate form is
// e0 * Gamma_k / (sigma2_k beta_k) * A_{k-1} * (1 - rho_k); the exact form
// keeps the antenna noise. Throws std::out_of_range on a bad index.
double hop_snr(double e0, const NetworkConfig& cfg, const ChannelState& channel,
               const PsAllocation& alloc, int k, SnrForm form = SnrForm::approximate);

// All K+1 hop SNRs at once.
Eigen::ArrayXd hop_snrs(double e0, const NetworkConfig& cfg, const ChannelState& channel,
                        const PsAllocation& alloc, SnrForm form = SnrForm::approximate);

struct PowerMinSolution {
  double e0_star_w = 0.0;
  PsAllocation allocation;
  Eigen::ArrayXd hop_snrs;    // size K+1
  Eigen::ArrayXd kkt_slacks;  // (snr_k - gammabar_k)/gammabar_k, ~0 at the optimum
};

struct RateMaxSolution {
  double gamma_hat_star = 0.0;  // common per-hop SNR, linear
  double rate_star = 0.0;       // log2(1 + gamma_hat_star)
  PsAllocation allocation;
  Eigen::ArrayXd hop_snrs;  // size K+1, all equal to gamma_hat_star
};

// Smallest source power meeting every per-node SNR threshold, and the
// splitting ratios that meet all thresholds with equality:
//   E0* = sum_k gammabar_k sigma2_k beta_k / Gamma_k.
// Throws infeasible_channel_error when some Gamma_k <= 0.
PowerMinSolution min_source_power(const NetworkConfig& cfg, const ChannelState& channel);

// Largest common SNR a budget E0 can sustain on every hop:
//   gamma* = E0 / sum_k sigma2_k beta_k / Gamma_k,
// with ratios equalizing all hop SNRs at gamma*. Requires E0 > 0.
RateMaxSolution max_min_rate(const NetworkConfig& cfg, const ChannelState& channel);

enum class ExchangeDirection { power_to_snr, snr_to_power };

// The single constant sum_k sigma2_k beta_k / Gamma_k maps a power budget
// to its achievable common SNR and back.
double duality_exchange(double value, ExchangeDirection direction, const NetworkConfig& cfg,
                        const ChannelState& channel);

struct FixedPsBaseline {
  double min_power_w = 0.0;  // smallest E0 meeting every threshold at the fixed ratio
  double min_rate = 0.0;     // bottleneck rate at cfg.source_power_w
  PsAllocation allocation;
};

// The naive scheme: every relay splits at rho_fixed, the destination at 0.
// min_power = max_k w_k / (A_{k-1} (1 - rho_k));
// min_rate  = min_k log2(1 + snr_k) at the configured source power.
FixedPsBaseline fixed_ps_baseline(const NetworkConfig& cfg, const ChannelState& channel,
                                  double rho_fixed);

// Relay-count results. `none` means even a direct source->destination
// hop is unaffordable; `unbounded` means the per-hop cost series
// converges below the budget so any chain length is feasible.
struct RelayCountResult {
  enum class Kind { finite, none, unbounded };
  Kind kind = Kind::finite;
  long count = 0;

  static RelayCountResult finite(long n) { return {Kind::finite, n}; }
  static RelayCountResult none() { return {Kind::none, 0}; }
  static RelayCountResult unbounded() { return {Kind::unbounded, 0}; }

  bool operator==(const RelayCountResult&) const = default;
};

// Closed-form estimate of the largest supportable relay count for a
// homogeneous chain with per-hop compound gain `hop_gain`
// (= fading_mean * beta * C * (d/d0)^-alpha) and per-hop cost
// alpha0 = gammabar * sigma2 * beta:
//   K ~ ln[1 -/+ (E0/alpha0 + 1)(1 - 1/hop_gain)] / (-ln hop_gain) - 1,
// floored to an integer. hop_gain == 1 is outside the formula's domain
// (throws std::domain_error); hop_gain > 1 with a nonpositive log
// argument returns `unbounded`.
RelayCountResult estimate_relay_count(double e0, double gammabar, double sigma2, double beta,
                                      double hop_gain);

// Same estimate with the gain assembled from geometry; fading_mean is the
// assumed mean of |h~|^2 (default 0.5, configurable to 1.0).
RelayCountResult estimate_relay_count(double e0, double gammabar, double sigma2, double beta,
                                      const HopGeometry& geom, double fading_mean = 0.5);

}  // namespace swipt
