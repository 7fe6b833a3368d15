#include "wsn/network_model.hpp"

#include <cmath>
#include <string>

#include "wsn/error.hpp"
#include "wsn/kernels.hpp"
#include "wsn/rng.hpp"

namespace wsn {

Meters distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

Point FieldConfig::sink() const {
  return sink_position.value_or(Point{width / 2.0, height / 2.0});
}

std::int64_t FieldConfig::advanced_count() const {
  return std::llround(hetero_fraction * static_cast<double>(node_count));
}

void FieldConfig::validate() const {
  if (!(width > 0.0) || !std::isfinite(width)) throw ConfigError("width", "must be > 0");
  if (!(height > 0.0) || !std::isfinite(height)) throw ConfigError("height", "must be > 0");
  if (node_count < 1) throw ConfigError("nodes", "must be >= 1");
  if (!(initial_energy > 0.0) || !std::isfinite(initial_energy)) {
    throw ConfigError("initial_energy", "must be > 0");
  }
  if (!(hetero_fraction >= 0.0 && hetero_fraction <= 1.0)) {
    throw ConfigError("hetero_fraction", "must be in [0, 1]");
  }
  if (!(hetero_alpha >= 0.0) || !std::isfinite(hetero_alpha)) {
    throw ConfigError("hetero_alpha", "must be >= 0");
  }
  if (sink_position && (!std::isfinite(sink_position->x) || !std::isfinite(sink_position->y))) {
    throw ConfigError("sink_x", "sink position must be finite");
  }
}

std::vector<NodeState> deploy(const FieldConfig& config) {
  Rng rng = derive_stream(config.rng_seed, Stream::deployment);
  const auto advanced = config.advanced_count();
  std::vector<NodeState> nodes;
  nodes.reserve(static_cast<std::size_t>(config.node_count));
  for (std::int64_t i = 0; i < config.node_count; ++i) {
    NodeState node;
    node.id = node_id(static_cast<std::size_t>(i));
    node.position.x = rng.uniform(0.0, config.width);
    node.position.y = rng.uniform(0.0, config.height);
    node.is_advanced = i < advanced;
    node.initial_energy =
        node.is_advanced ? config.initial_energy * (1.0 + config.hetero_alpha) : config.initial_energy;
    node.residual_energy = node.initial_energy;
    nodes.push_back(node);
  }
  return nodes;
}

std::optional<FarthestNode> max_distance_alive_node(std::span<const NodeState> nodes, Point sink) {
  std::vector<double> xs(nodes.size()), ys(nodes.size()), dist(nodes.size());
  std::vector<std::uint8_t> mask(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    xs[i] = nodes[i].position.x;
    ys[i] = nodes[i].position.y;
    mask[i] = nodes[i].alive ? 1 : 0;
  }
  kernels::distances_to_point(xs, ys, sink.x, sink.y, dist);
  // Kernel ties resolve to the smallest position; map positions back to ids.
  std::optional<FarthestNode> best;
  const auto at = kernels::masked_argmax(dist, mask);
  if (at < 0) return best;
  best = FarthestNode{nodes[static_cast<std::size_t>(at)].id, dist[static_cast<std::size_t>(at)]};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (mask[i] != 0 && dist[i] == best->distance && nodes[i].id < best->id) best->id = nodes[i].id;
  }
  return best;
}

Network::Network(std::vector<NodeState> nodes, Point sink)
    : nodes_(std::move(nodes)),
      sink_(sink),
      xs_(nodes_.size()),
      ys_(nodes_.size()),
      sink_distance_(nodes_.size()) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id != node_id(i)) {
      throw std::invalid_argument("node ids must equal their position in the list");
    }
    xs_[i] = nodes_[i].position.x;
    ys_[i] = nodes_[i].position.y;
    initial_total_ += nodes_[i].residual_energy;
  }
  kernels::distances_to_point(xs_, ys_, sink_.x, sink_.y, sink_distance_);
}

std::optional<FarthestNode> Network::farthest_alive() const {
  std::vector<std::uint8_t> mask(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) mask[i] = nodes_[i].alive ? 1 : 0;
  const auto at = kernels::masked_argmax(sink_distance_, mask);
  if (at < 0) return std::nullopt;
  const auto i = static_cast<std::size_t>(at);
  return FarthestNode{node_id(i), sink_distance_[i]};
}

Draw Network::charge(NodeId id, Joules cost) {
  NodeState& n = nodes_[index_of(id)];
  Draw draw;
  if (!n.alive) return draw;
  if (n.residual_energy >= cost) {
    n.residual_energy -= cost;
    draw.spent = cost;
    draw.completed = true;
  } else {
    draw.spent = n.residual_energy;
    n.residual_energy = 0.0;
  }
  if (n.residual_energy <= 0.0) {
    n.residual_energy = 0.0;
    n.alive = false;
    draw.died = true;
  }
  consumed_total_ += draw.spent;
  return draw;
}

Draw Network::probe(NodeId id, Joules cost) const {
  const NodeState& n = nodes_[index_of(id)];
  Draw draw;
  if (!n.alive) return draw;
  draw.completed = n.residual_energy >= cost;
  draw.spent = draw.completed ? cost : n.residual_energy;
  return draw;
}

std::size_t Network::alive_count() const {
  std::size_t alive = 0;
  for (const auto& n : nodes_) alive += n.alive ? 1 : 0;
  return alive;
}

Joules Network::residual_total() const {
  Joules total = 0.0;
  for (const auto& n : nodes_) total += n.residual_energy;
  return total;
}

}  // namespace wsn
