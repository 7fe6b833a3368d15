#pragma once

// Round loop: threshold scan, sleep classification, election and cluster
// formation, TEEN gating, energy accounting, savings, metrics snapshot.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wsn/network_model.hpp"
#include "wsn/protocols.hpp"
#include "wsn/radio_model.hpp"
#include "wsn/rng.hpp"

namespace wsn {

struct SimulationConfig {
  FieldConfig field;
  RadioParams radio = default_radio_params();
  ProtocolConfig protocol;
  bool ehorm = false;
  RoundIndex max_rounds = 10000;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  bool operator==(const SimulationConfig&) const = default;
};

/// Table defaults for one protocol. SEP and DEEC get the heterogeneous
/// setting m = 0.1, alpha = 1; LEACH and TEEN are homogeneous.
SimulationConfig default_simulation_config(ProtocolKind kind);

struct RoundMetrics {
  RoundIndex round = 0;
  std::int64_t alive = 0;
  std::int64_t asleep = 0;
  std::int64_t heads = 0;
  std::int64_t packets_to_sink = 0;  // cumulative
  Joules residual_total = 0.0;
  Joules e_th = 0.0;                 // 0 when the sleep overlay is off
  Joules savings_total = 0.0;        // cumulative

  std::int64_t packets_this_round = 0;
  std::int64_t deaths = 0;
  Joules consumed_total = 0.0;       // cumulative
  Joules e_total_ch = 0.0;
  Joules e_average_ch = 0.0;
  std::int64_t clustered_nodes = 0;

  bool operator==(const RoundMetrics&) const = default;
};

struct SimulationResult {
  std::vector<RoundMetrics> per_round;
  std::optional<RoundIndex> stability_period;  // round of the first death
  std::optional<RoundIndex> network_lifetime;  // round of the last death
  std::int64_t total_packets = 0;
  Joules initial_total = 0.0;
  std::vector<std::optional<RoundIndex>> death_round;  // per node id
  SimulationConfig config;
};

/// An alive sleeping node and the role it would have drawn had it been awake.
struct SleeperRole {
  NodeId id{};
  bool would_be_head = false;
};

/// Pluggable sleep/awake overlay. Without one, every alive node is awake.
class SleepScheduler {
 public:
  virtual ~SleepScheduler() = default;

  /// Threshold and classification phases; sets NodeState::asleep and
  /// returns the round's threshold energy.
  virtual Joules schedule(Network& network, RoundIndex round) = 0;

  /// Savings phase; returns cumulative savings so far.
  virtual Joules record(const Network& network, const ClusterAssignment& assignment,
                        std::span<const SleeperRole> sleepers) = 0;
};

struct RoundView {
  RoundIndex round;
  const Network& network;                  // after accounting; asleep flags still set
  const ClusterAssignment& assignment;
  std::span<const Joules> residual_before; // per node id, before accounting
  std::span<const std::uint8_t> reporting; // per node id
  const RoundLedger& ledger;
};

struct SimOptions {
  /// Check partition, sleep exclusion and energy conservation every round;
  /// violations throw InvariantViolation.
  bool check_invariants = false;
  EnergyMode energy = EnergyMode::deduct;
  std::function<void(const RoundView&)> observer;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Simulation {
 public:
  /// Deploys the field. Throws ConfigError on invalid configuration.
  explicit Simulation(SimulationConfig config, std::unique_ptr<SleepScheduler> scheduler = nullptr,
                      SimOptions options = {});

  /// Runs the next round. std::nullopt once every node is dead or
  /// max_rounds rounds have run.
  std::optional<RoundMetrics> step_round();

  bool finished() const;
  RoundIndex next_round() const { return round_; }
  const Network& network() const { return network_; }
  const SimulationConfig& config() const { return config_; }

  SimulationResult result() const;

  /// Steps until finished and returns the result.
  SimulationResult run();

 private:
  SimulationConfig config_;
  Network network_;
  std::unique_ptr<SleepScheduler> scheduler_;
  SimOptions options_;
  Rng election_rng_;
  Rng sensing_rng_;
  RoundIndex round_ = 0;
  std::int64_t packets_ = 0;
  Joules savings_ = 0.0;
  std::vector<std::optional<double>> last_reported_;
  std::vector<std::optional<RoundIndex>> death_round_;
  std::vector<RoundMetrics> per_round_;
};

/// Config-driven entry point; attaches the threshold sleep overlay when
/// config.ehorm is set. Defined in the wsn_ehorm library.
SimulationResult run_simulation(const SimulationConfig& config, SimOptions options = {});

// Multi-seed aggregation.

enum class Metric : std::uint8_t { stability_period, network_lifetime, total_packets };

std::string_view metric_name(Metric metric);

/// Round-valued metrics that were never reached count as max_rounds.
double metric_value(const SimulationResult& result, Metric metric);

struct MetricStats {
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::int64_t not_reached = 0;
};

struct BatchSummary {
  std::size_t runs = 0;
  MetricStats stability_period;
  MetricStats network_lifetime;
  MetricStats total_packets;

  const MetricStats& stats(Metric metric) const;
};

/// Throws std::invalid_argument when empty or when configs differ in more
/// than the seed.
BatchSummary summarize_batch(std::span<const SimulationResult> results);

struct PairedComparison {
  std::size_t pairs = 0;
  std::size_t wins = 0;  // variant > baseline
  std::size_t ties = 0;
  std::size_t losses = 0;
  double win_rate = 0.0;
  double non_loss_rate = 0.0;
  double mean_delta = 0.0;     // variant - baseline
  std::vector<double> deltas;  // per pair
};

/// Pairs must line up by seed. Throws std::invalid_argument otherwise.
PairedComparison compare_paired(std::span<const SimulationResult> variant,
                                std::span<const SimulationResult> baseline, Metric metric);

}  // namespace wsn
