#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "swipt/solve.hpp"

// Independent checks of the closed forms: exhaustive grid search and
// bisection-on-feasibility for the two optimization problems, direct
// summation for the relay-count estimate, and optimality certificates
// built from constraint slacks and allocation increments. Nothing here
// reuses the closed-form solution path it is checking.
namespace swipt::oracle {

struct grid_too_large_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double step = 1e-2;  // ratio resolution, in [1e-3, 0.1]
  int max_relays = 3;  // largest chain searched exhaustively

  void validate() const;
};

struct GridSearchResult {
  double gamma_hat = 0.0;    // best bottleneck SNR found
  Eigen::ArrayXd rho;        // the maximizing grid point
  std::uint64_t leaves = 0;  // grid points visited (before pruning)
};

// Sweeps every relay ratio over {0, step, 2 step, ...} < 1 and returns
// the grid point with the largest bottleneck SNR. Refuses chains beyond
// grid.max_relays or grids larger than ~2e7 points (the error message
// carries the size estimate).
GridSearchResult grid_search_max_min_rate(const NetworkConfig& cfg, const ChannelState& channel,
                                          const GridSpec& grid);

// True iff some allocation gives every hop SNR >= gamma_hat at source
// power e0. Propagates the required decode fraction hop by hop.
bool snr_feasible(double gamma_hat, double e0, const NetworkConfig& cfg,
                  const ChannelState& channel);

// True iff source power e0 can meet every per-node threshold in cfg.
bool power_feasible(double e0, const NetworkConfig& cfg, const ChannelState& channel);

// Supremum of feasible bottleneck SNRs at cfg.source_power_w, located by
// bisection to relative tolerance tol.
double bisection_max_min_rate(const NetworkConfig& cfg, const ChannelState& channel,
                              double tol = 1e-12);

// Smallest source power meeting every threshold, by bracket doubling and
// bisection to relative tolerance tol.
double bisection_min_power(const NetworkConfig& cfg, const ChannelState& channel,
                           double tol = 1e-12);

// Evidence that a solution is the constrained optimum: every constraint
// active (zero slack), every hop at the common normalized level, and the
// allocation increments A_{k-1} - A_k proportional to the problem weights.
struct OptimalityCertificate {
  Eigen::ArrayXd constraint_slacks;  // (snr_k - target_k)/target_k
  double level_spread = 0.0;         // max_k snr_k/target_k - min_k snr_k/target_k
  double increment_deviation = 0.0;  // max_k |(A_{k-1} - A_k) - w_k/sum(w)|

  double max_abs_slack() const;
  bool passes(double tol) const;
};

OptimalityCertificate verify_certificate(const PowerMinSolution& sol, const NetworkConfig& cfg,
                                         const ChannelState& channel);
OptimalityCertificate verify_certificate(const RateMaxSolution& sol, const NetworkConfig& cfg,
                                         const ChannelState& channel);

// Largest K >= 0 whose chain cost sum_{k=1}^{K+1} alpha0 / hop_gain^k fits
// the budget, found by direct summation (alpha0 = gammabar sigma2 beta).
// Returns `none` when even K = 0 is unaffordable and `unbounded` when the
// infinite series converges within the budget.
RelayCountResult exact_relay_count(double e0, double gammabar, double sigma2, double beta,
                                   double hop_gain);

}  // namespace swipt::oracle
