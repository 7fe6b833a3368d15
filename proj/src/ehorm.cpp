#include "wsn/ehorm.hpp"

#include <limits>
#include <stdexcept>

namespace wsn {

Joules compute_threshold(const RadioParams& radio, Meters max_distance) {
  if (!(max_distance >= 0.0)) throw std::invalid_argument("distance must be >= 0");
  const auto bits = static_cast<double>(radio.packet_bits);
  const double d2 = max_distance * max_distance;
  return (radio.e_elec + radio.e_da) * bits + radio.e_mp * bits * (d2 * d2);
}

std::optional<ThresholdState> scan_threshold(const Network& network, const RadioParams& radio) {
  const auto farthest = network.farthest_alive();
  if (!farthest) return std::nullopt;
  return ThresholdState{compute_threshold(radio, farthest->distance), farthest->id,
                        farthest->distance};
}

SleepPartition classify_sleep(std::span<const NodeState> nodes, Joules e_th) {
  SleepPartition out;
  for (const auto& n : nodes) {
    if (!n.alive) continue;
    (n.residual_energy >= e_th ? out.awake : out.asleep).push_back(n.id);
  }
  return out;
}

SavingsLedger record_savings(std::span<const SleeperRole> sleepers, const Network& network,
                             const ClusterAssignment& assignment, const RadioParams& radio,
                             SavingsLedger ledger) {
  ledger.per_round_normal = 0.0;
  ledger.per_round_ch_equivalent = 0.0;
  for (const SleeperRole& sleeper : sleepers) {
    const Meters to_sink = network.sink_distance(sleeper.id);
    if (sleeper.would_be_head) {
      ledger.per_round_ch_equivalent += ch_round_energy(radio, 0, to_sink);
      continue;
    }
    Meters hop = to_sink;
    if (!assignment.heads.empty()) {
      const Point at = network.node(sleeper.id).position;
      hop = std::numeric_limits<double>::infinity();
      for (NodeId head : assignment.heads) {
        const Meters d = distance(at, network.node(head).position);
        if (d < hop) hop = d;
      }
    }
    ledger.per_round_normal += tx_energy(radio, radio.packet_bits, hop);
  }
  ledger.cumulative_total += ledger.per_round_normal + ledger.per_round_ch_equivalent;
  return ledger;
}

Joules ThresholdSleepScheduler::schedule(Network& network, RoundIndex /*round*/) {
  threshold_ = scan_threshold(network, radio_);
  if (!threshold_) return 0.0;
  const SleepPartition partition = classify_sleep(network.nodes(), threshold_->e_th);
  for (NodeId id : partition.asleep) network.node(id).asleep = true;
  return threshold_->e_th;
}

Joules ThresholdSleepScheduler::record(const Network& network, const ClusterAssignment& assignment,
                                       std::span<const SleeperRole> sleepers) {
  savings_ = record_savings(sleepers, network, assignment, radio_, savings_);
  return savings_.cumulative_total;
}

}  // namespace wsn
