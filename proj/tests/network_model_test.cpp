#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"
#include "wsn/error.hpp"
#include "wsn/network_model.hpp"

namespace wsn {
namespace {

TEST(Distance, Examples) {
  EXPECT_EQ(distance({0, 0}, {0, 0}), 0.0);
  EXPECT_EQ(distance({0, 0}, {3, 4}), 5.0);
  EXPECT_NEAR(distance({0, 0}, {50, 50}), 70.71067811865476, 1e-12);
  EXPECT_EQ(distance({1.5, -2}, {7, 9}), distance({7, 9}, {1.5, -2}));
}

TEST(Deploy, DeterministicForSeed) {
  FieldConfig config;
  config.rng_seed = 42;
  const auto a = deploy(config);
  const auto b = deploy(config);
  EXPECT_EQ(a, b);
  config.rng_seed = 43;
  EXPECT_NE(deploy(config), a);
}

TEST(Deploy, PositionsInsideField) {
  FieldConfig config;
  config.width = 200;
  config.height = 30;
  config.node_count = 500;
  for (const auto& n : deploy(config)) {
    EXPECT_GE(n.position.x, 0.0);
    EXPECT_LE(n.position.x, 200.0);
    EXPECT_GE(n.position.y, 0.0);
    EXPECT_LE(n.position.y, 30.0);
    EXPECT_TRUE(n.alive);
  }
}

TEST(Deploy, HomogeneousTotalEnergy) {
  FieldConfig config;
  const auto nodes = deploy(config);
  int advanced = 0;
  double total = 0;
  for (const auto& n : nodes) {
    advanced += n.is_advanced;
    total += n.residual_energy;
  }
  EXPECT_EQ(advanced, 0);
  EXPECT_NEAR(total, 50.0, 1e-12);
}

TEST(Deploy, HeterogeneousTotalEnergy) {
  FieldConfig config;
  config.hetero_fraction = 0.1;
  config.hetero_alpha = 1.0;
  const auto nodes = deploy(config);
  int advanced = 0;
  double total = 0;
  for (const auto& n : nodes) {
    advanced += n.is_advanced;
    total += n.residual_energy;
    EXPECT_EQ(n.residual_energy, n.is_advanced ? 1.0 : 0.5);
  }
  EXPECT_EQ(advanced, 10);
  // 90 * 0.5 + 10 * 1.0
  EXPECT_NEAR(total, 55.0, 1e-12);
}

TEST(FieldConfig, SinkDefaultsToCentreAndValidation) {
  FieldConfig config;
  config.width = 80;
  config.height = 40;
  EXPECT_EQ(config.sink(), (Point{40, 20}));
  config.node_count = 0;
  EXPECT_THROW(config.validate(), ConfigError);
  config.node_count = 3;
  config.initial_energy = 0;
  try {
    config.validate();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "initial_energy");
  }
}

TEST(MaxDistance, SingleNode) {
  const auto nodes = testing::nodes_at({{0, 0}});
  const auto far = max_distance_alive_node(nodes, {50, 50});
  ASSERT_TRUE(far);
  EXPECT_EQ(far->id, NodeId{0});
  EXPECT_NEAR(far->distance, 70.71067811865476, 1e-12);
}

TEST(MaxDistance, TieGoesToSmallerIdAndSleepersCount) {
  auto nodes = testing::nodes_at({{10, 50}, {50, 90}, {90, 50}, {50, 10}, {50, 55}});
  nodes[0].alive = false;
  nodes[1].asleep = true;
  const auto far = max_distance_alive_node(nodes, {50, 50});
  ASSERT_TRUE(far);
  EXPECT_EQ(far->id, NodeId{1});
  EXPECT_EQ(far->distance, 40.0);

  const Network net{testing::nodes_at({{10, 50}, {50, 90}, {90, 50}}), {50, 50}};
  EXPECT_EQ(net.farthest_alive()->id, NodeId{0});
}

TEST(MaxDistance, DeadNetworkSignalled) {
  auto nodes = testing::nodes_at({{0, 0}, {1, 1}});
  for (auto& n : nodes) n.alive = false;
  EXPECT_FALSE(max_distance_alive_node(nodes, {50, 50}));
  EXPECT_FALSE(max_distance_alive_node({}, {50, 50}));
  Network net{std::move(nodes), {50, 50}};
  EXPECT_FALSE(net.farthest_alive());
}

TEST(Network, ChargeClampsAndKills) {
  Network net = testing::network_at({{0, 0}, {1, 1}}, {50, 50}, 1.0);
  Draw d = net.charge(NodeId{0}, 0.25);
  EXPECT_TRUE(d.completed);
  EXPECT_FALSE(d.died);
  EXPECT_EQ(net.node(NodeId{0}).residual_energy, 0.75);

  d = net.charge(NodeId{0}, 2.0);
  EXPECT_FALSE(d.completed);
  EXPECT_TRUE(d.died);
  EXPECT_EQ(d.spent, 0.75);
  EXPECT_EQ(net.node(NodeId{0}).residual_energy, 0.0);
  EXPECT_FALSE(net.node(NodeId{0}).alive);

  // Exactly affordable: delivered, then dead at zero.
  d = net.charge(NodeId{1}, 1.0);
  EXPECT_TRUE(d.completed);
  EXPECT_TRUE(d.died);

  d = net.charge(NodeId{1}, 1.0);
  EXPECT_EQ(d.spent, 0.0);
  EXPECT_EQ(net.consumed_total(), 2.0);
  EXPECT_EQ(net.initial_total(), net.residual_total() + net.consumed_total());
}

TEST(Network, ProbeDoesNotDeduct) {
  Network net = testing::network_at({{0, 0}}, {50, 50}, 1.0);
  EXPECT_TRUE(net.probe(NodeId{0}, 0.5).completed);
  EXPECT_FALSE(net.probe(NodeId{0}, 1.5).completed);
  EXPECT_EQ(net.node(NodeId{0}).residual_energy, 1.0);
  EXPECT_EQ(net.consumed_total(), 0.0);
}

TEST(Network, RejectsOutOfOrderIds) {
  auto nodes = testing::nodes_at({{0, 0}, {1, 1}});
  std::swap(nodes[0], nodes[1]);
  EXPECT_THROW((Network{nodes, {0, 0}}), std::invalid_argument);
}

}  // namespace
}  // namespace wsn
