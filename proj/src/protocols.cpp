#include "wsn/protocols.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "wsn/error.hpp"
#include "wsn/kernels.hpp"

namespace wsn {

std::string_view protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::leach: return "LEACH";
    case ProtocolKind::teen: return "TEEN";
    case ProtocolKind::sep: return "SEP";
    case ProtocolKind::deec: return "DEEC";
  }
  return "?";
}

std::optional<ProtocolKind> parse_protocol(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "leach") return ProtocolKind::leach;
  if (lower == "teen") return ProtocolKind::teen;
  if (lower == "sep") return ProtocolKind::sep;
  if (lower == "deec") return ProtocolKind::deec;
  return std::nullopt;
}

void ProtocolConfig::validate() const {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("p", "must be in (0, 1)");
  if (!std::isfinite(teen.hard_threshold)) throw ConfigError("teen_hard_threshold", "must be finite");
  if (!(teen.soft_threshold >= 0.0) || !std::isfinite(teen.soft_threshold)) {
    throw ConfigError("teen_soft_threshold", "must be >= 0");
  }
  if (!std::isfinite(teen.sensed_min) || !std::isfinite(teen.sensed_max) ||
      !(teen.sensed_min < teen.sensed_max)) {
    throw ConfigError("teen_sensed_max", "sensed range must satisfy min < max");
  }
  if (deec_p_opt && !(*deec_p_opt > 0.0 && *deec_p_opt <= 1.0)) {
    throw ConfigError("deec_p_opt", "must be in (0, 1]");
  }
}

std::int64_t epoch_length(double p) {
  const double inv = 1.0 / p;
  const double nearest = std::round(inv);
  if (std::abs(inv - nearest) <= 1e-9 * inv) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::ceil(inv));
}

double sep_probability(double p, bool advanced, double m, double alpha) {
  const double weight = 1.0 + alpha * m;
  return advanced ? p * (1.0 + alpha) / weight : p / weight;
}

namespace {

double rotating_threshold(double p, const NodeState& node, RoundIndex round) {
  const std::int64_t epoch = epoch_length(p);
  if (node.last_head_round && *node.last_head_round / epoch == round / epoch) return 0.0;
  return p / (1.0 - p * static_cast<double>(round % epoch));
}

}  // namespace

double election_threshold(const NodeState& node, const ProtocolConfig& config,
                          const ElectionContext& context) {
  switch (config.kind) {
    case ProtocolKind::leach:
    case ProtocolKind::teen:
      return rotating_threshold(config.p, node, context.round);
    case ProtocolKind::sep:
      return rotating_threshold(
          sep_probability(config.p, node.is_advanced, context.hetero_fraction, context.hetero_alpha),
          node, context.round);
    case ProtocolKind::deec: {
      if (!(context.mean_alive_energy > 0.0)) return 0.0;
      const double t = config.deec_reference() * node.residual_energy / context.mean_alive_energy;
      return std::clamp(t, 0.0, 1.0);
    }
  }
  return 0.0;
}

Joules mean_alive_energy(std::span<const NodeState> nodes) {
  Joules total = 0.0;
  std::size_t alive = 0;
  for (const auto& n : nodes) {
    if (!n.alive) continue;
    total += n.residual_energy;
    ++alive;
  }
  return alive == 0 ? 0.0 : total / static_cast<double>(alive);
}

std::vector<NodeId> elect_heads(std::span<const NodeState> nodes, const ProtocolConfig& config,
                                const ElectionContext& context, std::span<const double> draws) {
  if (draws.size() < nodes.size()) throw std::invalid_argument("one election draw per node required");
  std::vector<NodeId> heads;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeState& n = nodes[i];
    if (!n.alive || n.asleep) continue;
    if (draws[i] < election_threshold(n, config, context)) heads.push_back(n.id);
  }
  std::sort(heads.begin(), heads.end());
  return heads;
}

std::vector<NodeId> elect_heads(std::span<const NodeState> nodes, const ProtocolConfig& config,
                                const ElectionContext& context, Rng& rng) {
  std::vector<double> draws(nodes.size());
  for (auto& d : draws) d = rng.uniform01();
  return elect_heads(nodes, config, context, draws);
}

ClusterAssignment form_clusters(const Network& network, std::span<const NodeId> heads) {
  ClusterAssignment out;
  out.heads.assign(heads.begin(), heads.end());
  std::sort(out.heads.begin(), out.heads.end());

  std::vector<NodeId> others;
  for (const auto& n : network.nodes()) {
    if (!n.alive || n.asleep) continue;
    if (std::binary_search(out.heads.begin(), out.heads.end(), n.id)) continue;
    others.push_back(n.id);
  }
  if (out.heads.empty()) {
    out.direct_transmitters = std::move(others);
    return out;
  }

  std::vector<double> xs, ys, hx, hy;
  for (NodeId id : others) {
    xs.push_back(network.node(id).position.x);
    ys.push_back(network.node(id).position.y);
  }
  for (NodeId id : out.heads) {
    hx.push_back(network.node(id).position.x);
    hy.push_back(network.node(id).position.y);
  }
  std::vector<std::uint32_t> nearest(others.size());
  std::vector<double> dist(others.size());
  kernels::nearest_point(xs, ys, hx, hy, nearest, dist);
  for (std::size_t i = 0; i < others.size(); ++i) {
    out.membership.emplace(others[i], out.heads[nearest[i]]);
  }
  return out;
}

std::optional<std::string> check_partition(const Network& network,
                                           const ClusterAssignment& assignment) {
  std::set<NodeId> seen;
  auto claim = [&](NodeId id, const char* set) -> std::optional<std::string> {
    if (index_of(id) >= network.size()) return std::string(set) + " holds an unknown node id";
    const auto& n = network.node(id);
    if (!n.alive) return std::string(set) + " holds dead node " + std::to_string(index_of(id));
    if (n.asleep) return std::string(set) + " holds sleeping node " + std::to_string(index_of(id));
    if (!seen.insert(id).second) return "node " + std::to_string(index_of(id)) + " appears twice";
    return std::nullopt;
  };
  for (NodeId id : assignment.heads) {
    if (auto err = claim(id, "heads")) return err;
  }
  for (const auto& [member, head] : assignment.membership) {
    if (auto err = claim(member, "membership")) return err;
    if (!std::binary_search(assignment.heads.begin(), assignment.heads.end(), head)) {
      return "member " + std::to_string(index_of(member)) + " maps to a non-head";
    }
    const Point at = network.node(member).position;
    const Meters own = distance(at, network.node(head).position);
    for (NodeId other : assignment.heads) {
      const Meters d = distance(at, network.node(other).position);
      if (d < own || (d == own && other < head)) {
        return "member " + std::to_string(index_of(member)) + " is not with its nearest head";
      }
    }
  }
  for (NodeId id : assignment.direct_transmitters) {
    if (auto err = claim(id, "direct_transmitters")) return err;
  }
  if (!assignment.direct_transmitters.empty() && !assignment.heads.empty()) {
    return "direct transmitters present although heads exist";
  }
  for (const auto& n : network.nodes()) {
    if (n.alive && !n.asleep && !seen.contains(n.id)) {
      return "awake node " + std::to_string(index_of(n.id)) + " is unassigned";
    }
  }
  return std::nullopt;
}

bool teen_should_report(double sensed, std::optional<double> last_reported, const TeenConfig& teen) {
  if (!(sensed > teen.hard_threshold)) return false;
  return !last_reported || std::abs(sensed - *last_reported) >= teen.soft_threshold;
}

RoundLedger account_round(Network& network, const ClusterAssignment& assignment,
                          const RadioParams& radio, std::span<const std::uint8_t> reporting,
                          EnergyMode mode) {
  RoundLedger ledger;
  ledger.spent.assign(network.size(), 0.0);
  const Bits packet = radio.packet_bits;

  auto reports = [&](NodeId id) { return reporting.empty() || reporting[index_of(id)] != 0; };
  auto pay = [&](NodeId id, Joules cost) {
    const Draw draw = mode == EnergyMode::deduct ? network.charge(id, cost) : network.probe(id, cost);
    ledger.spent[index_of(id)] += draw.spent;
    if (draw.died) ledger.deaths.push_back(id);
    return draw.completed;
  };

  std::map<NodeId, std::size_t> slot;
  for (NodeId head : assignment.heads) {
    slot.emplace(head, ledger.clusters.size());
    ledger.clusters.push_back(ClusterEnergy{head});
  }

  for (const auto& [member, head] : assignment.membership) {
    ClusterEnergy& cluster = ledger.clusters[slot.at(head)];
    ++cluster.members;
    if (!reports(member)) continue;
    const Meters d = distance(network.node(member).position, network.node(head).position);
    if (pay(member, tx_energy(radio, packet, d))) ++cluster.reporting_members;
    cluster.total += ledger.spent[index_of(member)];
  }

  for (ClusterEnergy& cluster : ledger.clusters) {
    const Joules cost =
        ch_round_energy(radio, cluster.reporting_members, network.sink_distance(cluster.head));
    cluster.delivered = pay(cluster.head, cost);
    if (cluster.delivered) ++ledger.packets_delivered;
    cluster.total += ledger.spent[index_of(cluster.head)];
    cluster.average = cluster.total / static_cast<double>(cluster.members + 1);
    ledger.e_total_ch += cluster.total;
    ledger.clustered_nodes += cluster.members + 1;
  }
  if (ledger.clustered_nodes > 0) {
    ledger.e_average_ch = ledger.e_total_ch / static_cast<double>(ledger.clustered_nodes);
  }

  for (NodeId id : assignment.direct_transmitters) {
    if (!reports(id)) continue;
    if (pay(id, tx_energy(radio, packet, network.sink_distance(id)))) ++ledger.packets_delivered;
  }

  for (Joules s : ledger.spent) ledger.total += s;
  return ledger;
}

}  // namespace wsn
