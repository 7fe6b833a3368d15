#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "wsn/ehorm.hpp"

namespace wsn {
namespace {

using testing::network_at;
using testing::nodes_at;

// Independent evaluation of the threshold formula in extended precision.
long double threshold_oracle(long double e_elec, long double e_da, long double e_mp, long double bits,
                             long double d) {
  return (e_elec + e_da) * bits + e_mp * bits * std::pow(d, 4.0L);
}

TEST(Threshold, Examples) {
  const RadioParams r = default_radio_params();
  // d^4 = 2.5e7: 2.2e-4 + 0.0013e-12 * 4000 * 2.5e7 = 2.2e-4 + 1.3e-4
  EXPECT_NEAR(compute_threshold(r, std::sqrt(5000.0)), 3.5e-4, 1e-15);
  EXPECT_NEAR(compute_threshold(r, 0.0), 2.2e-4, 1e-18);
  const double base = compute_threshold(r, 0.0);
  const double at_30 = compute_threshold(r, 30.0) - base;
  const double at_60 = compute_threshold(r, 60.0) - base;
  EXPECT_NEAR(at_60 / at_30, 16.0, 1e-9);
  EXPECT_THROW(compute_threshold(r, -1.0), std::invalid_argument);
}

TEST(Threshold, MatchesIndependentEvaluator) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> coef(0.1, 10.0), dist(0.0, 300.0);
  std::uniform_int_distribution<Bits> bits(1, 100000);
  for (int i = 0; i < 1000; ++i) {
    RadioParams r;
    r.e_elec = coef(gen) * 1e-8;
    r.e_da = coef(gen) * 1e-9;
    r.e_mp = coef(gen) * 1e-16;
    r.packet_bits = bits(gen);
    const double d = dist(gen);
    const long double expected = threshold_oracle(r.e_elec, r.e_da, r.e_mp, r.packet_bits, d);
    const double got = compute_threshold(r, d);
    EXPECT_LT(std::abs((got - expected) / expected), 1e-12L);
  }
}

TEST(Threshold, StrictlyIncreasingInDistance) {
  const RadioParams r = default_radio_params();
  double last = compute_threshold(r, 0.0);
  for (double d = 0.5; d < 200.0; d += 0.5) {
    const double now = compute_threshold(r, d);
    EXPECT_GT(now, last);
    last = now;
  }
}

TEST(Threshold, ScanUsesFarthestAliveNode) {
  const RadioParams r = default_radio_params();
  auto nodes = nodes_at({{0, 0}, {50, 60}, {100, 50}});
  nodes[0].alive = false;
  nodes[0].residual_energy = 0;
  const Network net{nodes, {50, 50}};
  const auto state = scan_threshold(net, r);
  ASSERT_TRUE(state);
  EXPECT_EQ(state->max_node_id, NodeId{2});
  EXPECT_EQ(state->max_distance, 50.0);
  EXPECT_EQ(state->e_th, compute_threshold(r, 50.0));
  EXPECT_GT(state->e_th, 0.0);
}

TEST(Classify, BoundaryIsAwake) {
  auto nodes = nodes_at({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  nodes[0].residual_energy = 3.5e-4;
  nodes[1].residual_energy = 3.4e-4;
  nodes[2].alive = false;
  nodes[2].residual_energy = 0;
  const auto part = classify_sleep(nodes, 3.5e-4);
  EXPECT_EQ(part.awake, (std::vector<NodeId>{NodeId{0}, NodeId{3}}));
  EXPECT_EQ(part.asleep, (std::vector<NodeId>{NodeId{1}}));
}

TEST(Classify, AllBelowThresholdSleep) {
  const auto nodes = nodes_at({{0, 0}, {1, 1}}, 1e-5);
  const auto part = classify_sleep(nodes, 2e-4);
  EXPECT_TRUE(part.awake.empty());
  EXPECT_EQ(part.asleep.size(), 2u);
}

TEST(Classify, FreshNetworkHasNoSleepers) {
  FieldConfig field;
  Network net{deploy(field), field.sink()};
  const auto state = scan_threshold(net, default_radio_params());
  ASSERT_TRUE(state);
  // Corner distance is at most sqrt(5000), so e_th <= 3.5e-4 J << 0.5 J.
  EXPECT_LE(state->e_th, 3.5e-4 + 1e-15);
  EXPECT_TRUE(classify_sleep(net.nodes(), state->e_th).asleep.empty());
}

TEST(Savings, NoSleepersLeavesLedgerUnchanged) {
  const Network net = network_at({{0, 0}});
  SavingsLedger start;
  start.cumulative_total = 1.25;
  const auto out = record_savings({}, net, {}, default_radio_params(), start);
  EXPECT_EQ(out.cumulative_total, 1.25);
  EXPECT_EQ(out.per_round_normal, 0.0);
}

TEST(Savings, SleeperWithoutHeadsSavesDirectSend) {
  const RadioParams r = default_radio_params();
  auto nodes = nodes_at({{50, 20}});
  nodes[0].asleep = true;
  const Network net{nodes, {50, 50}};
  const std::vector<SleeperRole> sleepers{{NodeId{0}, false}};
  const auto out = record_savings(sleepers, net, {}, r, {});
  EXPECT_EQ(out.per_round_normal, tx_energy(r, 4000, 30.0));
  EXPECT_EQ(out.cumulative_total, tx_energy(r, 4000, 30.0));
}

TEST(Savings, RolesAndAccumulation) {
  const RadioParams r = default_radio_params();
  auto nodes = nodes_at({{50, 20}, {50, 25}, {10, 50}, {55, 29}});
  nodes[1].asleep = true;
  nodes[2].asleep = true;
  const Network net{nodes, {50, 50}};
  ClusterAssignment a;
  a.heads = {NodeId{0}, NodeId{3}};
  a.membership = {};
  const std::vector<SleeperRole> sleepers{{NodeId{1}, false}, {NodeId{2}, true}};
  SavingsLedger ledger;
  ledger = record_savings(sleepers, net, a, r, ledger);
  // Node 1 is 5 m from head 0 (head 3 is sqrt(41) away); node 2 would head 40 m from the sink.
  EXPECT_EQ(ledger.per_round_normal, tx_energy(r, 4000, 5.0));
  EXPECT_EQ(ledger.per_round_ch_equivalent, ch_round_energy(r, 0, 40.0));
  const double first = ledger.cumulative_total;
  ledger = record_savings(sleepers, net, a, r, ledger);
  EXPECT_GE(ledger.cumulative_total, first);
  EXPECT_NEAR(ledger.cumulative_total, 2 * first, 1e-18);
}

TEST(Scheduler, MarksSleepersFromThreshold) {
  const RadioParams r = default_radio_params();
  auto nodes = nodes_at({{0, 0}, {50, 55}, {60, 50}});
  nodes[1].residual_energy = 1e-4;
  Network net{nodes, {50, 50}};
  ThresholdSleepScheduler scheduler{r};
  const Joules e_th = scheduler.schedule(net, 0);
  EXPECT_EQ(e_th, compute_threshold(r, std::sqrt(5000.0)));
  EXPECT_FALSE(net.node(NodeId{0}).asleep);
  EXPECT_TRUE(net.node(NodeId{1}).asleep);
  EXPECT_FALSE(net.node(NodeId{2}).asleep);
  ASSERT_TRUE(scheduler.last_threshold());
  EXPECT_EQ(scheduler.last_threshold()->max_node_id, NodeId{0});
}

}  // namespace
}  // namespace wsn
