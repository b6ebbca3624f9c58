#include "swipt/solve.hpp"

#include <cmath>
#include <stdexcept>

#include "swipt/units.hpp"

namespace swipt {

namespace {

void require_nondegenerate(const ChannelState& channel) {
  if (channel.hops() == 0) throw infeasible_channel_error("empty channel");
  if ((channel.cumulative_gains <= 0.0).any())
    throw infeasible_channel_error("degenerate channel: some cumulative gain is zero");
}

void require_consistent(const NetworkConfig& cfg, const ChannelState& channel) {
  if (static_cast<Eigen::Index>(cfg.nodes.size()) != channel.hops())
    throw std::invalid_argument("config and channel describe different chain lengths");
}

}  // namespace

Eigen::ArrayXd power_weights(const NetworkConfig& cfg, const ChannelState& channel) {
  require_consistent(cfg, channel);
  require_nondegenerate(channel);
  return cfg.snr_thresholds() * cfg.id_noises() * cfg.betas() / channel.cumulative_gains;
}

Eigen::ArrayXd rate_weights(const NetworkConfig& cfg, const ChannelState& channel) {
  require_consistent(cfg, channel);
  require_nondegenerate(channel);
  return cfg.id_noises() * cfg.betas() / channel.cumulative_gains;
}

PsAllocation allocation_from_weights(const Eigen::ArrayXd& weights) {
  const Eigen::Index n = weights.size();
  if (n == 0) throw std::invalid_argument("allocation_from_weights: empty weight vector");
  if ((weights < 0.0).any())
    throw std::invalid_argument("allocation_from_weights: weights must be nonnegative");

  // S_k = sum_{j>=k} w_j; then A_k = S_{k+1}/S_1, rho_k = S_{k+1}/S_k and
  // 1 - rho_k = w_k/S_k, all plain divisions with no cancellation.
  Eigen::ArrayXd suffix(n + 1);
  suffix[n] = 0.0;
  for (Eigen::Index i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + weights[i];

  PsAllocation alloc;
  const Eigen::Index relays = n - 1;
  alloc.rho.resize(relays);
  alloc.decode.resize(relays);
  alloc.cumulative.resize(n + 1);
  alloc.cumulative[0] = 1.0;
  for (Eigen::Index k = 0; k < relays; ++k) {
    if (suffix[k] == 0.0) {
      // every remaining target is vacuous; split nothing off
      alloc.rho[k] = 0.0;
      alloc.decode[k] = 1.0;
    } else {
      alloc.rho[k] = suffix[k + 1] / suffix[k];
      alloc.decode[k] = weights[k] / suffix[k];
    }
    alloc.cumulative[k + 1] = suffix[0] == 0.0 ? 0.0 : suffix[k + 1] / suffix[0];
  }
  alloc.cumulative[n] = 0.0;
  return alloc;
}

Eigen::ArrayXd harvested_energy(double e0, const NetworkConfig& cfg, const ChannelState& channel,
                                const PsAllocation& alloc) {
  require_consistent(cfg, channel);
  const Eigen::Index n = channel.hops();
  if (alloc.relay_count() != static_cast<int>(n) - 1)
    throw std::invalid_argument("harvested_energy: allocation length mismatch");

  // E_k = rho_k beta_k |h_k|^2 E_{k-1}, with E_0 the source power.
  Eigen::ArrayXd energy(n);
  const Eigen::ArrayXd betas = cfg.betas();
  double prev = e0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double rho = alloc.rho_at(static_cast<int>(i) + 1);
    energy[i] = rho * betas[i] * channel.hop_gains[i] * prev;
    prev = energy[i];
  }
  return energy;
}

double hop_snr(double e0, const NetworkConfig& cfg, const ChannelState& channel,
               const PsAllocation& alloc, int k, SnrForm form) {
  require_consistent(cfg, channel);
  const int n = static_cast<int>(channel.hops());
  if (k < 1 || k > n) throw std::out_of_range("hop_snr: hop index out of range");

  const double decode = alloc.decode_at(k);
  const double a_prev = alloc.cumulative[k - 1];
  const NodeParams& node = cfg.nodes[static_cast<std::size_t>(k - 1)];
  if (form == SnrForm::approximate) {
    return e0 * channel.cumulative_gains[k - 1] / (node.id_noise_w * node.beta) * a_prev * decode;
  }
  // incoming power is what the previous node harvested
  const double gamma_prev = k >= 2 ? channel.cumulative_gains[k - 2] : 1.0;
  const double incoming = e0 * gamma_prev * a_prev;
  return incoming * channel.hop_gains[k - 1] * decode /
         (decode * node.antenna_noise_w + node.id_noise_w);
}

Eigen::ArrayXd hop_snrs(double e0, const NetworkConfig& cfg, const ChannelState& channel,
                        const PsAllocation& alloc, SnrForm form) {
  Eigen::ArrayXd snrs(channel.hops());
  for (int k = 1; k <= static_cast<int>(channel.hops()); ++k)
    snrs[k - 1] = hop_snr(e0, cfg, channel, alloc, k, form);
  return snrs;
}

PowerMinSolution min_source_power(const NetworkConfig& cfg, const ChannelState& channel) {
  const Eigen::ArrayXd weights = power_weights(cfg, channel);

  PowerMinSolution sol;
  sol.e0_star_w = weights.sum();
  sol.allocation = allocation_from_weights(weights);
  sol.hop_snrs = hop_snrs(sol.e0_star_w, cfg, channel, sol.allocation);

  const Eigen::ArrayXd thresholds = cfg.snr_thresholds();
  sol.kkt_slacks.resize(thresholds.size());
  for (Eigen::Index i = 0; i < thresholds.size(); ++i) {
    const double gap = sol.hop_snrs[i] - thresholds[i];
    sol.kkt_slacks[i] = thresholds[i] > 0.0 ? gap / thresholds[i] : gap;
  }
  return sol;
}

RateMaxSolution max_min_rate(const NetworkConfig& cfg, const ChannelState& channel) {
  if (!(cfg.source_power_w > 0.0))
    throw std::domain_error("max_min_rate: source power must be positive");
  const Eigen::ArrayXd weights = rate_weights(cfg, channel);
  const double total = weights.sum();

  RateMaxSolution sol;
  sol.gamma_hat_star = cfg.source_power_w / total;
  sol.rate_star = units::snr_to_rate(sol.gamma_hat_star);
  sol.allocation = allocation_from_weights(weights);
  sol.hop_snrs = hop_snrs(cfg.source_power_w, cfg, channel, sol.allocation);
  return sol;
}

double duality_exchange(double value, ExchangeDirection direction, const NetworkConfig& cfg,
                        const ChannelState& channel) {
  if (!(value > 0.0)) throw std::domain_error("duality_exchange: value must be positive");
  const double total = rate_weights(cfg, channel).sum();
  return direction == ExchangeDirection::power_to_snr ? value / total : value * total;
}

FixedPsBaseline fixed_ps_baseline(const NetworkConfig& cfg, const ChannelState& channel,
                                  double rho_fixed) {
  if (!(rho_fixed > 0.0 && rho_fixed < 1.0))
    throw std::domain_error("fixed_ps_baseline: ratio must lie in (0,1)");
  require_consistent(cfg, channel);
  require_nondegenerate(channel);

  FixedPsBaseline baseline;
  baseline.allocation = PsAllocation::uniform(cfg.relay_count(), rho_fixed);

  const Eigen::ArrayXd weights = power_weights(cfg, channel);
  const Eigen::Index n = channel.hops();
  double required = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const int k = static_cast<int>(i) + 1;
    const double usable = baseline.allocation.cumulative[k - 1] * baseline.allocation.decode_at(k);
    required = std::max(required, weights[i] / usable);
  }
  baseline.min_power_w = required;

  if (cfg.source_power_w > 0.0) {
    const Eigen::ArrayXd snrs = hop_snrs(cfg.source_power_w, cfg, channel, baseline.allocation);
    baseline.min_rate = units::snr_to_rate(snrs.minCoeff());
  }
  return baseline;
}

RelayCountResult estimate_relay_count(double e0, double gammabar, double sigma2, double beta,
                                      double hop_gain) {
  if (!(hop_gain > 0.0)) throw std::domain_error("estimate_relay_count: hop gain must be positive");
  if (hop_gain == 1.0)
    throw std::domain_error("estimate_relay_count: unit hop gain is outside the formula's domain");
  const double alpha0 = gammabar * sigma2 * beta;
  if (!(alpha0 > 0.0)) throw std::domain_error("estimate_relay_count: per-hop cost must be positive");
  if (e0 < 0.0) throw std::domain_error("estimate_relay_count: budget must be nonnegative");

  const double budget_ratio = e0 / alpha0 + 1.0;
  double log_arg;
  if (hop_gain > 1.0) {
    log_arg = 1.0 - budget_ratio * (1.0 - 1.0 / hop_gain);
    if (log_arg <= 0.0) return RelayCountResult::unbounded();
  } else {
    log_arg = 1.0 + budget_ratio * (1.0 / hop_gain - 1.0);
  }
  const double k_plus_1 = std::log(log_arg) / -std::log(hop_gain);
  // nudge before flooring so exactly-representable integer solutions
  // survive the log/divide rounding
  return RelayCountResult::finite(static_cast<long>(std::floor(k_plus_1 - 1.0 + 1e-9)));
}

RelayCountResult estimate_relay_count(double e0, double gammabar, double sigma2, double beta,
                                      const HopGeometry& geom, double fading_mean) {
  return estimate_relay_count(e0, gammabar, sigma2, beta,
                              fading_mean * beta * large_scale_gain(geom));
}

}  // namespace swipt
