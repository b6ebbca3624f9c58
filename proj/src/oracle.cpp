#include "swipt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace swipt::oracle {

void GridSpec::validate() const {
  if (!(step >= 1e-3 && step <= 0.1)) throw std::domain_error("GridSpec: step must lie in [1e-3, 0.1]");
  if (max_relays < 0 || max_relays > 3) throw std::domain_error("GridSpec: max_relays must lie in [0, 3]");
}

namespace {

// scale_k = e0 Gamma_k / (sigma2_k beta_k); hop SNR is scale_k A_{k-1} (1 - rho_k)
Eigen::ArrayXd snr_scales(double e0, const NetworkConfig& cfg, const ChannelState& channel) {
  return e0 * channel.cumulative_gains / (cfg.id_noises() * cfg.betas());
}

struct GridWalk {
  const Eigen::ArrayXd& scales;
  const std::vector<double>& ticks;
  int relays;
  double best = -1.0;
  Eigen::ArrayXd best_rho;
  Eigen::ArrayXd current;
  std::uint64_t leaves = 0;

  void descend(int depth, double a_prev, double min_so_far) {
    if (depth == relays) {
      ++leaves;
      const double bottleneck = std::min(min_so_far, scales[relays] * a_prev);
      if (bottleneck > best) {
        best = bottleneck;
        best_rho = current;
      }
      return;
    }
    for (double rho : ticks) {
      const double snr = scales[depth] * a_prev * (1.0 - rho);
      const double next_min = std::min(min_so_far, snr);
      if (next_min <= best) continue;  // no completion can beat the incumbent
      current[depth] = rho;
      descend(depth + 1, a_prev * rho, next_min);
    }
  }
};

}  // namespace

GridSearchResult grid_search_max_min_rate(const NetworkConfig& cfg, const ChannelState& channel,
                                          const GridSpec& grid) {
  grid.validate();
  const int relays = cfg.relay_count();
  if (relays > grid.max_relays)
    throw grid_too_large_error("grid search limited to " + std::to_string(grid.max_relays) +
                               " relays, got " + std::to_string(relays));

  const auto ticks_per_dim = static_cast<std::size_t>(std::floor(1.0 / grid.step));
  const double points = std::pow(static_cast<double>(ticks_per_dim), relays);
  if (points > 2e7)
    throw grid_too_large_error("grid would hold ~" + std::to_string(points) + " points");

  std::vector<double> ticks(ticks_per_dim);
  for (std::size_t i = 0; i < ticks_per_dim; ++i) ticks[i] = static_cast<double>(i) * grid.step;

  GridWalk walk{snr_scales(cfg.source_power_w, cfg, channel), ticks, relays};
  walk.current.resize(relays);
  walk.best_rho.resize(relays);
  walk.descend(0, 1.0, std::numeric_limits<double>::infinity());

  return {walk.best, walk.best_rho, walk.leaves};
}

bool snr_feasible(double gamma_hat, double e0, const NetworkConfig& cfg,
                  const ChannelState& channel) {
  if (gamma_hat <= 0.0) return true;
  const int relays = cfg.relay_count();
  double a_prev = 1.0;
  for (int k = 1; k <= relays; ++k) {
    const NodeParams& node = cfg.nodes[static_cast<std::size_t>(k - 1)];
    const double supply = e0 * channel.cumulative_gains[k - 1] * a_prev;
    const double needed_decode = gamma_hat * node.id_noise_w * node.beta / supply;
    if (!(needed_decode <= 1.0)) return false;  // also rejects NaN from a dead hop
    a_prev *= 1.0 - needed_decode;
  }
  const NodeParams& dest = cfg.nodes.back();
  const double dest_snr =
      e0 * channel.cumulative_gains[relays] * a_prev / (dest.id_noise_w * dest.beta);
  return dest_snr >= gamma_hat;
}

bool power_feasible(double e0, const NetworkConfig& cfg, const ChannelState& channel) {
  const int relays = cfg.relay_count();
  if (e0 < 0.0) return false;
  double a_prev = 1.0;
  for (int k = 1; k <= relays; ++k) {
    const NodeParams& node = cfg.nodes[static_cast<std::size_t>(k - 1)];
    if (node.snr_threshold > 0.0) {
      const double supply = e0 * channel.cumulative_gains[k - 1] * a_prev;
      const double needed_decode = node.snr_threshold * node.id_noise_w * node.beta / supply;
      if (!(needed_decode <= 1.0)) return false;
      a_prev *= 1.0 - needed_decode;
    }
  }
  const NodeParams& dest = cfg.nodes.back();
  const double dest_snr =
      e0 * channel.cumulative_gains[relays] * a_prev / (dest.id_noise_w * dest.beta);
  return dest_snr >= dest.snr_threshold;
}

double bisection_max_min_rate(const NetworkConfig& cfg, const ChannelState& channel, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("bisection: tolerance must be positive");
  const double e0 = cfg.source_power_w;
  double lo = 0.0;
  double hi = snr_scales(e0, cfg, channel).maxCoeff();  // no hop can exceed its unsplit SNR
  if (snr_feasible(hi, e0, cfg, channel)) return hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (snr_feasible(mid, e0, cfg, channel) ? lo : hi) = mid;
    if (hi - lo <= tol * std::max(lo, 1e-300)) break;
  }
  return 0.5 * (lo + hi);
}

double bisection_min_power(const NetworkConfig& cfg, const ChannelState& channel, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("bisection: tolerance must be positive");
  if (power_feasible(0.0, cfg, channel)) return 0.0;  // all thresholds vacuous
  double hi = 1.0;
  int doublings = 0;
  while (!power_feasible(hi, cfg, channel)) {
    hi *= 2.0;
    if (++doublings > 2048) throw infeasible_channel_error("no finite power meets the thresholds");
  }
  double lo = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (power_feasible(mid, cfg, channel) ? hi : lo) = mid;
    if (hi - lo <= tol * std::max(hi, 1e-300)) break;
  }
  return 0.5 * (lo + hi);
}

double OptimalityCertificate::max_abs_slack() const {
  return constraint_slacks.size() == 0 ? 0.0 : constraint_slacks.abs().maxCoeff();
}

bool OptimalityCertificate::passes(double tol) const {
  return max_abs_slack() <= tol && level_spread <= tol && increment_deviation <= tol;
}

namespace {

OptimalityCertificate build_certificate(const Eigen::ArrayXd& snrs, const Eigen::ArrayXd& targets,
                                        const Eigen::ArrayXd& weights, const PsAllocation& alloc) {
  OptimalityCertificate cert;
  cert.constraint_slacks.resize(snrs.size());
  double lo_level = std::numeric_limits<double>::infinity();
  double hi_level = -lo_level;
  bool any_level = false;
  for (Eigen::Index i = 0; i < snrs.size(); ++i) {
    const double gap = snrs[i] - targets[i];
    cert.constraint_slacks[i] = targets[i] > 0.0 ? gap / targets[i] : gap;
    if (targets[i] > 0.0) {
      const double level = snrs[i] / targets[i];
      lo_level = std::min(lo_level, level);
      hi_level = std::max(hi_level, level);
      any_level = true;
    }
  }
  cert.level_spread = any_level ? hi_level - lo_level : 0.0;

  const double total = weights.sum();
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    const double observed = alloc.cumulative[i] - alloc.cumulative[i + 1];
    const double expected = total > 0.0 ? weights[i] / total : 0.0;
    cert.increment_deviation = std::max(cert.increment_deviation, std::abs(observed - expected));
  }
  return cert;
}

}  // namespace

OptimalityCertificate verify_certificate(const PowerMinSolution& sol, const NetworkConfig& cfg,
                                         const ChannelState& channel) {
  return build_certificate(sol.hop_snrs, cfg.snr_thresholds(), power_weights(cfg, channel),
                           sol.allocation);
}

OptimalityCertificate verify_certificate(const RateMaxSolution& sol, const NetworkConfig& cfg,
                                         const ChannelState& channel) {
  const Eigen::ArrayXd targets =
      Eigen::ArrayXd::Constant(sol.hop_snrs.size(), sol.gamma_hat_star);
  return build_certificate(sol.hop_snrs, targets, rate_weights(cfg, channel), sol.allocation);
}

RelayCountResult exact_relay_count(double e0, double gammabar, double sigma2, double beta,
                                   double hop_gain) {
  if (!(hop_gain > 0.0)) throw std::domain_error("exact_relay_count: hop gain must be positive");
  const double alpha0 = gammabar * sigma2 * beta;
  if (!(alpha0 > 0.0)) throw std::domain_error("exact_relay_count: per-hop cost must be positive");
  if (e0 < 0.0) throw std::domain_error("exact_relay_count: budget must be nonnegative");

  if (hop_gain > 1.0 && e0 >= alpha0 / (hop_gain - 1.0)) return RelayCountResult::unbounded();

  double term = alpha0 / hop_gain;  // cost of hop 1
  if (term > e0) return RelayCountResult::none();
  double sum = term;
  long n = 1;  // hops paid for so far
  while (true) {
    term /= hop_gain;
    if (sum + term > e0) break;
    sum += term;
    ++n;
    // for hop_gain > 1 the terms shrink; once they stop moving the sum,
    // the budget covers the whole tail
    if (hop_gain > 1.0 && sum + term == sum) return RelayCountResult::unbounded();
  }
  return RelayCountResult::finite(n - 1);
}

}  // namespace swipt::oracle
