#pragma once

// Threshold-based sleep/awake overlay. Each round the sink finds the alive
// node farthest from it and sets the threshold energy to what one packet
// from that distance costs; nodes holding less than that sleep the round.

#include <optional>
#include <span>
#include <vector>

#include "wsn/network_model.hpp"
#include "wsn/protocols.hpp"
#include "wsn/radio_model.hpp"
#include "wsn/sim_engine.hpp"

namespace wsn {

struct ThresholdState {
  Joules e_th = 0.0;
  NodeId max_node_id{};
  Meters max_distance = 0.0;
};

/// (e_elec + e_da) * D + e_mp * D * d^4, always on the d^4 amplifier term.
/// Throws std::invalid_argument for a negative distance.
Joules compute_threshold(const RadioParams& radio, Meters max_distance);

/// std::nullopt when no node is alive.
std::optional<ThresholdState> scan_threshold(const Network& network, const RadioParams& radio);

struct SleepPartition {
  std::vector<NodeId> awake;   // residual >= e_th
  std::vector<NodeId> asleep;  // residual < e_th
};

/// Alive nodes only; recomputed from scratch every round.
SleepPartition classify_sleep(std::span<const NodeState> nodes, Joules e_th);

struct SavingsLedger {
  Joules per_round_normal = 0.0;
  Joules per_round_ch_equivalent = 0.0;
  Joules cumulative_total = 0.0;
};

/// Adds what each sleeper would have spent awake: a would-be head its
/// memberless head round, anyone else one packet to the nearest elected head
/// (or to the sink when there is none). Per-round fields hold this round only.
SavingsLedger record_savings(std::span<const SleeperRole> sleepers, const Network& network,
                             const ClusterAssignment& assignment, const RadioParams& radio,
                             SavingsLedger ledger);

class ThresholdSleepScheduler final : public SleepScheduler {
 public:
  explicit ThresholdSleepScheduler(RadioParams radio) : radio_(radio) {}

  Joules schedule(Network& network, RoundIndex round) override;
  Joules record(const Network& network, const ClusterAssignment& assignment,
                std::span<const SleeperRole> sleepers) override;

  const SavingsLedger& savings() const { return savings_; }
  const std::optional<ThresholdState>& last_threshold() const { return threshold_; }

 private:
  RadioParams radio_;
  SavingsLedger savings_;
  std::optional<ThresholdState> threshold_;
};

}  // namespace wsn
