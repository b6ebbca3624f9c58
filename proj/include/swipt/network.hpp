#pragma once

#include <Eigen/Core>
#include <vector>

#include "swipt/channel.hpp"

namespace swipt {

// Radio parameters of one receiving node (relay or destination).
struct NodeParams {
  double beta = 0.7;           // energy conversion efficiency, (0,1]; destination has 1
  double id_noise_w = 1e-11;   // sigma^2, decoder circuit noise (watts)
  double antenna_noise_w = 0;  // delta^2 (watts)
  double snr_threshold = 1.0;  // gamma-bar, linear, >= 0
};

// A chain: source -> relay 1 -> ... -> relay K -> destination.
// nodes[i] and hops[i] describe the receiver and geometry of hop i+1;
// the last entry is the destination.
struct NetworkConfig {
  std::vector<NodeParams> nodes;  // size K+1
  std::vector<HopGeometry> hops;  // size K+1
  double source_power_w = 1.0;    // E0, used by the rate problems

  int relay_count() const { return static_cast<int>(nodes.size()) - 1; }

  Eigen::ArrayXd betas() const;
  Eigen::ArrayXd id_noises() const;
  Eigen::ArrayXd antenna_noises() const;
  Eigen::ArrayXd snr_thresholds() const;

  // Throws std::invalid_argument when lengths disagree, the chain is
  // empty, or the destination beta is not 1.
  void validate() const;
};

// Power-splitting ratios rho_1..rho_K for the relays (the destination's
// ratio is fixed to 0) plus the cumulative products A_k = prod_{j<=k} rho_j
// with A_0 = 1 and A_{K+1} = 0. The decode fractions 1 - rho_k are kept
// alongside so SNR evaluation does not lose precision when rho sits
// within an ulp of 1.
struct PsAllocation {
  Eigen::ArrayXd rho;         // size K
  Eigen::ArrayXd decode;      // size K, entry k-1 is 1 - rho_k
  Eigen::ArrayXd cumulative;  // size K+2, entry k is A_k

  int relay_count() const { return static_cast<int>(rho.size()); }

  // rho_k for k = 1..K+1 (1-based, destination returns 0)
  double rho_at(int k) const { return k <= relay_count() ? rho[k - 1] : 0.0; }

  // 1 - rho_k for k = 1..K+1 (destination decodes everything)
  double decode_at(int k) const { return k <= relay_count() ? decode[k - 1] : 1.0; }

  // Builds the cumulative products from the ratios.
  static PsAllocation from_ratios(const Eigen::ArrayXd& rho);

  // K copies of the same ratio (the naive fixed-PS scheme).
  static PsAllocation uniform(int relay_count, double ratio);
};

}  // namespace swipt
