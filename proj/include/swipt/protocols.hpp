#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swipt/solve.hpp"

// In-process simulation of the two ways the splitting ratios reach the
// relays: the source computing and forwarding all of them (centralized),
// or each node deriving its successor's ratio from one forwarded pair
// (distributed). Both must land on the closed-form allocation; the
// simulation also keeps per-node ledgers of transmitted bits and
// arithmetic operations.
namespace swipt::protocols {

// A zero ratio mid-chain: the recursion divides by rho_k and cannot
// propagate past the dead relay.
struct degenerate_recursion_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field widths for the bit ledgers: F info bits per payload, B bits per
// real value, i0 bits per index unit.
struct BitBudget {
  std::int64_t info_bits = 1024;
  std::int64_t real_bits = 32;
  std::int64_t index_bits = 16;

  void validate() const;
};

// Which closed form the dissemination carries.
enum class WeightKind {
  rate_max,   // weights sigma2_k beta_k / Gamma_k
  min_power,  // weights gammabar_k sigma2_k beta_k / Gamma_k
};

struct Message {
  int sender = 0;    // 0 = source, 1..K relays, K+1 destination
  int receiver = 0;
  std::string payload;
};

struct ProtocolTrace {
  std::vector<std::int64_t> transmitted_bits;  // size K+2, indexed by node
  std::vector<std::int64_t> arithmetic_ops;    // size K+2, in units of J
  std::vector<Message> messages;
  PsAllocation allocation;

  std::int64_t total_bits() const;
  std::int64_t max_node_bits() const;
  std::int64_t total_ops() const;
};

// ceil(log2(n)) for n >= 1 (0 for n <= 1): index fields occupy whole bits
int ceil_log2(std::int64_t n);

// Table formulas for one node's transmission, exposed for direct checks.
// Centralized source: K (i0 ceil_log2(K) + B) + F.
// Centralized relay k: (K-k) {i0 ceil_log2(K-k) + 2B} + F.
// Distributed (every transmitting node): 2B + F.
std::int64_t centralized_source_bits(int relay_count, const BitBudget& budget);
std::int64_t centralized_relay_bits(int relay_count, int relay_index, const BitBudget& budget);
std::int64_t distributed_node_bits(const BitBudget& budget);

// Source computes every ratio from its global CSI and forwards the
// remaining ones down the chain with each payload.
ProtocolTrace run_centralized(const NetworkConfig& cfg, const ChannelState& channel,
                              const BitBudget& budget, WeightKind kind = WeightKind::rate_max);

// Source seeds (rho_1, psi_1); each relay derives its successor's pair
// from the inbound pair and its own locally measured next-hop gain.
ProtocolTrace run_distributed(const NetworkConfig& cfg, const ChannelState& channel,
                              const BitBudget& budget, WeightKind kind = WeightKind::rate_max);

// Relay-step gain access is routed through `next_gain`, called as
// next_gain(relay_index, hop_index) with hop_index == relay_index + 1;
// tests substitute a tracking reader to pin down CSI locality.
ProtocolTrace run_distributed(const NetworkConfig& cfg, const ChannelState& channel,
                              const BitBudget& budget, WeightKind kind,
                              const std::function<double(int, int)>& next_gain);

struct MethodSummary {
  std::int64_t max_node_bits = 0;
  std::int64_t total_bits = 0;
  std::int64_t total_ops = 0;
};

struct ProtocolComparison {
  ProtocolTrace centralized;
  ProtocolTrace distributed;
  MethodSummary centralized_summary;
  MethodSummary distributed_summary;
};

ProtocolComparison compare_methods(const NetworkConfig& cfg, const ChannelState& channel,
                                   const BitBudget& budget, WeightKind kind = WeightKind::rate_max);

}  // namespace swipt::protocols
