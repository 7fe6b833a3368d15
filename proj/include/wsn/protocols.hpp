#pragma once

// Cluster-head election, cluster formation and per-round energy accounting
// for LEACH, TEEN, SEP and DEEC.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsn/network_model.hpp"
#include "wsn/radio_model.hpp"
#include "wsn/rng.hpp"

namespace wsn {

enum class ProtocolKind : std::uint8_t { leach, teen, sep, deec };

/// "LEACH", "TEEN", "SEP", "DEEC".
std::string_view protocol_name(ProtocolKind kind);

/// Case-insensitive.
std::optional<ProtocolKind> parse_protocol(std::string_view text);

/// TEEN reactive reporting. Sensed values are synthetic, drawn uniformly
/// from [sensed_min, sensed_max) per awake node per round.
struct TeenConfig {
  double hard_threshold = 100.0;
  double soft_threshold = 2.0;
  double sensed_min = 0.0;
  double sensed_max = 200.0;

  bool operator==(const TeenConfig&) const = default;
};

struct ProtocolConfig {
  ProtocolKind kind = ProtocolKind::leach;
  double p = 0.1;
  TeenConfig teen;
  std::optional<double> deec_p_opt;  // defaults to p

  double deec_reference() const { return deec_p_opt.value_or(p); }

  /// Throws ConfigError naming the offending field.
  void validate() const;

  bool operator==(const ProtocolConfig&) const = default;
};

struct ElectionContext {
  RoundIndex round = 0;
  double hetero_fraction = 0.0;  // SEP m
  double hetero_alpha = 0.0;     // SEP alpha
  Joules mean_alive_energy = 0.0;  // DEEC reference energy
};

/// ceil(1/p), with 1/p values within 1e-9 of an integer snapped to it so that
/// e.g. p = 0.1/1.1 gives 11 rather than 12.
std::int64_t epoch_length(double p);

/// SEP weighted probability for one class. Equals p for both classes when
/// alpha == 0, and for normal nodes when m == 0.
double sep_probability(double p, bool advanced, double m, double alpha);

/// Election probability T(node) for this round; 0 when the node already
/// served as head in its current epoch. Ignores liveness and sleep.
double election_threshold(const NodeState& node, const ProtocolConfig& config,
                          const ElectionContext& context);

/// Mean residual energy over alive nodes, 0 when none are alive.
Joules mean_alive_energy(std::span<const NodeState> nodes);

/// Awake alive node i becomes head when draws[id] < T(node). One draw per
/// node id is consumed whether or not the node is a candidate, so the same
/// draw sequence lines up across sleep patterns. Returns ids in ascending order.
std::vector<NodeId> elect_heads(std::span<const NodeState> nodes, const ProtocolConfig& config,
                                const ElectionContext& context, std::span<const double> draws);

std::vector<NodeId> elect_heads(std::span<const NodeState> nodes, const ProtocolConfig& config,
                                const ElectionContext& context, Rng& rng);

struct ClusterAssignment {
  std::vector<NodeId> heads;                 // ascending
  std::map<NodeId, NodeId> membership;       // member -> head
  std::vector<NodeId> direct_transmitters;   // ascending; only when there are no heads
};

/// Every awake alive non-head joins its nearest head (smaller head id on
/// ties). Without heads every awake alive node transmits directly.
ClusterAssignment form_clusters(const Network& network, std::span<const NodeId> heads);

/// Describes the first violated partition invariant, if any: the three sets
/// are disjoint, cover exactly the awake alive nodes, and every member sits
/// with its nearest head.
std::optional<std::string> check_partition(const Network& network,
                                           const ClusterAssignment& assignment);

bool teen_should_report(double sensed, std::optional<double> last_reported, const TeenConfig& teen);

enum class EnergyMode : std::uint8_t {
  deduct,
  frozen,  // costs are computed and reported but never deducted
};

struct ClusterEnergy {
  NodeId head{};
  std::int64_t members = 0;            // assigned members
  std::int64_t reporting_members = 0;  // members whose packet reached the head
  Joules total = 0.0;                  // head plus member spend
  Joules average = 0.0;                // total / (members + 1)
  bool delivered = false;
};

struct RoundLedger {
  std::vector<Joules> spent;  // per node id
  Joules total = 0.0;         // sum of spent in id order
  std::int64_t packets_delivered = 0;
  std::vector<ClusterEnergy> clusters;
  Joules e_total_ch = 0.0;
  Joules e_average_ch = 0.0;  // e_total_ch / clustered_nodes
  std::int64_t clustered_nodes = 0;
  std::vector<NodeId> deaths;
};

/// Members send to their head, then heads receive, aggregate and send one
/// packet to the sink, then direct transmitters send to the sink. A node
/// that cannot afford its cost spends what it has, dies, and its packet is
/// lost. `reporting` (indexed by id, empty = everyone) gates members and
/// direct transmitters; heads always send.
RoundLedger account_round(Network& network, const ClusterAssignment& assignment,
                          const RadioParams& radio, std::span<const std::uint8_t> reporting = {},
                          EnergyMode mode = EnergyMode::deduct);

}  // namespace wsn
