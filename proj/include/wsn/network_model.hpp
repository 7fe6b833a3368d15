#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wsn/units.hpp"

namespace wsn {

enum class NodeId : std::uint32_t {};

constexpr std::size_t index_of(NodeId id) { return static_cast<std::size_t>(id); }
constexpr NodeId node_id(std::size_t index) { return static_cast<NodeId>(index); }

struct Point {
  Meters x = 0.0;
  Meters y = 0.0;
  bool operator==(const Point&) const = default;
};

/// Euclidean; computed as sqrt(dx*dx + dy*dy) to match the geometry kernels.
Meters distance(Point a, Point b);

struct FieldConfig {
  Meters width = 100.0;
  Meters height = 100.0;
  std::int64_t node_count = 100;
  std::optional<Point> sink_position;  // field centre when unset
  Joules initial_energy = 0.5;
  double hetero_fraction = 0.0;  // m
  double hetero_alpha = 0.0;     // advanced nodes hold (1 + alpha) * initial_energy
  std::uint64_t rng_seed = 1;

  Point sink() const;
  std::int64_t advanced_count() const;
  /// Throws ConfigError naming the offending field.
  void validate() const;

  bool operator==(const FieldConfig&) const = default;
};

enum class Role : std::uint8_t { member, cluster_head, direct };

struct NodeState {
  NodeId id{};
  Point position;
  Joules residual_energy = 0.0;
  Joules initial_energy = 0.0;
  bool is_advanced = false;
  bool alive = true;
  bool asleep = false;  // this round
  Role role = Role::member;  // this round
  std::optional<RoundIndex> last_head_round;

  bool operator==(const NodeState&) const = default;
};

/// Nodes are uniform over [0,width]x[0,height]; ids [0, advanced_count())
/// are the advanced class. Deterministic in config.rng_seed.
std::vector<NodeState> deploy(const FieldConfig& config);

struct FarthestNode {
  NodeId id{};
  Meters distance = 0.0;
};

/// Farthest alive node (asleep or not) from the sink, smallest id on ties.
/// std::nullopt means the network is dead.
std::optional<FarthestNode> max_distance_alive_node(std::span<const NodeState> nodes, Point sink);

/// Result of charging a node for one operation.
struct Draw {
  Joules spent = 0.0;
  bool completed = false;  // the node could afford the full cost
  bool died = false;
};

/// A deployed field: node states plus fixed geometry in structure-of-arrays
/// form, and the energy ledger used for conservation checks.
class Network {
 public:
  Network(std::vector<NodeState> nodes, Point sink);

  std::span<NodeState> nodes() { return nodes_; }
  std::span<const NodeState> nodes() const { return nodes_; }
  NodeState& node(NodeId id) { return nodes_[index_of(id)]; }
  const NodeState& node(NodeId id) const { return nodes_[index_of(id)]; }
  std::size_t size() const { return nodes_.size(); }

  Point sink() const { return sink_; }
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  std::span<const Meters> sink_distances() const { return sink_distance_; }
  Meters sink_distance(NodeId id) const { return sink_distance_[index_of(id)]; }

  std::optional<FarthestNode> farthest_alive() const;

  /// Deducts cost, or everything left when the node cannot afford it.
  /// Residual energy is clamped at zero and the node dies on reaching it.
  Draw charge(NodeId id, Joules cost);

  /// Affordability check without any deduction (energy-frozen test mode).
  Draw probe(NodeId id, Joules cost) const;

  std::size_t alive_count() const;
  Joules residual_total() const;
  Joules initial_total() const { return initial_total_; }
  Joules consumed_total() const { return consumed_total_; }

 private:
  std::vector<NodeState> nodes_;
  Point sink_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<Meters> sink_distance_;
  Joules initial_total_ = 0.0;
  Joules consumed_total_ = 0.0;
};

}  // namespace wsn
