#include "swipt/network.hpp"

#include <stdexcept>

namespace swipt {

namespace {
Eigen::ArrayXd gather(const std::vector<NodeParams>& nodes, double NodeParams::*field) {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) out[static_cast<Eigen::Index>(i)] = nodes[i].*field;
  return out;
}
}  // namespace

Eigen::ArrayXd NetworkConfig::betas() const { return gather(nodes, &NodeParams::beta); }
Eigen::ArrayXd NetworkConfig::id_noises() const { return gather(nodes, &NodeParams::id_noise_w); }
Eigen::ArrayXd NetworkConfig::antenna_noises() const { return gather(nodes, &NodeParams::antenna_noise_w); }
Eigen::ArrayXd NetworkConfig::snr_thresholds() const { return gather(nodes, &NodeParams::snr_threshold); }

void NetworkConfig::validate() const {
  if (nodes.empty()) throw std::invalid_argument("NetworkConfig: chain needs at least a destination");
  if (nodes.size() != hops.size())
    throw std::invalid_argument("NetworkConfig: nodes and hops lengths differ");
  if (nodes.back().beta != 1.0)
    throw std::invalid_argument("NetworkConfig: destination beta must be 1 (it only decodes)");
  for (const NodeParams& node : nodes) {
    if (!(node.beta > 0.0 && node.beta <= 1.0))
      throw std::invalid_argument("NetworkConfig: beta must lie in (0,1]");
    if (!(node.id_noise_w > 0.0))
      throw std::invalid_argument("NetworkConfig: decoder noise must be positive");
    if (node.antenna_noise_w < 0.0 || node.snr_threshold < 0.0)
      throw std::invalid_argument("NetworkConfig: noise and thresholds must be nonnegative");
  }
  if (source_power_w < 0.0) throw std::invalid_argument("NetworkConfig: source power must be >= 0");
}

PsAllocation PsAllocation::from_ratios(const Eigen::ArrayXd& rho) {
  PsAllocation alloc;
  alloc.rho = rho;
  alloc.decode = 1.0 - rho;
  alloc.cumulative.resize(rho.size() + 2);
  alloc.cumulative[0] = 1.0;  // A_0
  for (Eigen::Index k = 0; k < rho.size(); ++k)
    alloc.cumulative[k + 1] = alloc.cumulative[k] * rho[k];
  alloc.cumulative[rho.size() + 1] = 0.0;  // destination splits nothing off
  return alloc;
}

PsAllocation PsAllocation::uniform(int relay_count, double ratio) {
  return from_ratios(Eigen::ArrayXd::Constant(relay_count, ratio));
}

}  // namespace swipt
