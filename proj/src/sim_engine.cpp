#include "wsn/sim_engine.hpp"

#include <cmath>
#include <string>

#include "wsn/error.hpp"

namespace wsn {

void SimulationConfig::validate() const {
  field.validate();
  try {
    radio.validate();
  } catch (const std::invalid_argument& e) {
    // "radio parameter <key> ..." names the offending field.
    const std::string message = e.what();
    const std::string prefix = "radio parameter ";
    std::string key = "radio";
    if (message.rfind(prefix, 0) == 0) key = message.substr(prefix.size(), message.find(' ', prefix.size()) - prefix.size());
    throw ConfigError(key, message);
  }
  protocol.validate();
  if (max_rounds < 0) throw ConfigError("rounds", "must be >= 0");
}

SimulationConfig default_simulation_config(ProtocolKind kind) {
  SimulationConfig config;
  config.protocol.kind = kind;
  if (kind == ProtocolKind::sep || kind == ProtocolKind::deec) {
    config.field.hetero_fraction = 0.1;
    config.field.hetero_alpha = 1.0;
  }
  return config;
}

namespace {

Network deploy_validated(const SimulationConfig& config) {
  config.validate();
  return Network{deploy(config.field), config.field.sink()};
}

}  // namespace

Simulation::Simulation(SimulationConfig config, std::unique_ptr<SleepScheduler> scheduler,
                       SimOptions options)
    : config_(std::move(config)),
      network_(deploy_validated(config_)),
      scheduler_(std::move(scheduler)),
      options_(std::move(options)),
      election_rng_(derive_stream(config_.field.rng_seed, Stream::election)),
      sensing_rng_(derive_stream(config_.field.rng_seed, Stream::sensing)),
      last_reported_(network_.size()),
      death_round_(network_.size()) {}

bool Simulation::finished() const {
  return round_ >= config_.max_rounds || network_.alive_count() == 0;
}

std::optional<RoundMetrics> Simulation::step_round() {
  if (finished()) return std::nullopt;
  const RoundIndex round = round_;
  const std::size_t n = network_.size();
  const bool teen = config_.protocol.kind == ProtocolKind::teen;

  std::vector<double> draws(n);
  for (auto& d : draws) d = election_rng_.uniform01();
  std::vector<double> sensed;
  if (teen) {
    sensed.resize(n);
    for (auto& s : sensed) s = sensing_rng_.uniform(config_.protocol.teen.sensed_min,
                                                    config_.protocol.teen.sensed_max);
  }

  for (auto& node : network_.nodes()) {
    node.asleep = false;
    node.role = Role::member;
  }

  // Threshold and sleep classification.
  Joules e_th = 0.0;
  if (scheduler_) e_th = scheduler_->schedule(network_, round);

  // Election and cluster formation over awake nodes.
  const ElectionContext context{round, config_.field.hetero_fraction, config_.field.hetero_alpha,
                                mean_alive_energy(network_.nodes())};
  const std::vector<NodeId> heads = elect_heads(network_.nodes(), config_.protocol, context, draws);
  for (NodeId id : heads) {
    network_.node(id).role = Role::cluster_head;
    network_.node(id).last_head_round = round;
  }
  const ClusterAssignment assignment = form_clusters(network_, heads);
  for (NodeId id : assignment.direct_transmitters) network_.node(id).role = Role::direct;

  if (options_.check_invariants) {
    if (auto violation = check_partition(network_, assignment)) {
      throw InvariantViolation("round " + std::to_string(round) + ": " + *violation);
    }
  }

  // TEEN reporting gate.
  std::vector<std::uint8_t> reporting(n, 1);
  if (teen) {
    auto gate = [&](NodeId id) {
      const std::size_t i = index_of(id);
      const bool report = teen_should_report(sensed[i], last_reported_[i], config_.protocol.teen);
      if (report) last_reported_[i] = sensed[i];
      reporting[i] = report ? 1 : 0;
    };
    for (const auto& entry : assignment.membership) gate(entry.first);
    for (NodeId id : assignment.direct_transmitters) gate(id);
  }

  // Energy accounting.
  std::vector<Joules> before(n);
  for (std::size_t i = 0; i < n; ++i) before[i] = network_.nodes()[i].residual_energy;
  const RoundLedger ledger =
      account_round(network_, assignment, config_.radio, reporting, options_.energy);
  packets_ += ledger.packets_delivered;
  for (NodeId id : ledger.deaths) death_round_[index_of(id)] = round;

  // Savings of the nodes that slept through the round.
  std::int64_t asleep = 0;
  std::vector<SleeperRole> sleepers;
  for (const auto& node : network_.nodes()) {
    if (!node.asleep) continue;
    ++asleep;
    sleepers.push_back(
        SleeperRole{node.id, draws[index_of(node.id)] < election_threshold(node, config_.protocol, context)});
  }
  if (scheduler_) savings_ = scheduler_->record(network_, assignment, sleepers);

  if (options_.check_invariants) {
    for (const auto& node : network_.nodes()) {
      if (node.asleep && node.residual_energy != before[index_of(node.id)]) {
        throw InvariantViolation("round " + std::to_string(round) + ": sleeping node " +
                                 std::to_string(index_of(node.id)) + " spent energy");
      }
    }
    const Joules initial = network_.initial_total();
    const Joules balance = network_.residual_total() + network_.consumed_total();
    if (std::abs(initial - balance) > 1e-9 * initial) {
      throw InvariantViolation("round " + std::to_string(round) + ": energy not conserved");
    }
  }

  if (options_.observer) {
    options_.observer(RoundView{round, network_, assignment, before, reporting, ledger});
  }

  RoundMetrics metrics;
  metrics.round = round;
  metrics.alive = static_cast<std::int64_t>(network_.alive_count());
  metrics.asleep = asleep;
  metrics.heads = static_cast<std::int64_t>(assignment.heads.size());
  metrics.packets_to_sink = packets_;
  metrics.residual_total = network_.residual_total();
  metrics.e_th = e_th;
  metrics.savings_total = savings_;
  metrics.packets_this_round = ledger.packets_delivered;
  metrics.deaths = static_cast<std::int64_t>(ledger.deaths.size());
  metrics.consumed_total = network_.consumed_total();
  metrics.e_total_ch = ledger.e_total_ch;
  metrics.e_average_ch = ledger.e_average_ch;
  metrics.clustered_nodes = ledger.clustered_nodes;
  per_round_.push_back(metrics);
  ++round_;
  return metrics;
}

SimulationResult Simulation::result() const {
  SimulationResult out;
  out.per_round = per_round_;
  out.total_packets = packets_;
  out.initial_total = network_.initial_total();
  out.death_round = death_round_;
  out.config = config_;
  for (const auto& m : per_round_) {
    if (!out.stability_period && m.deaths > 0) out.stability_period = m.round;
    if (!out.network_lifetime && m.alive == 0) out.network_lifetime = m.round;
  }
  return out;
}

SimulationResult Simulation::run() {
  while (step_round()) {
  }
  return result();
}

}  // namespace wsn
