#include <gtest/gtest.h>

#include "wsn/config.hpp"
#include "wsn/error.hpp"

namespace wsn {
namespace {

ConfigError config_error(std::string_view text, const Overrides& overrides = {}) {
  try {
    parse_config(text, overrides);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a ConfigError";
  return ConfigError("", "none");
}

TEST(ParseConfig, EmptyInputGivesTableDefaults) {
  const ExperimentSpec spec = parse_config("");
  const auto& sim = spec.simulation;
  EXPECT_EQ(sim.field.node_count, 100);
  EXPECT_EQ(sim.field.width, 100.0);
  EXPECT_EQ(sim.field.height, 100.0);
  EXPECT_EQ(sim.field.sink(), (Point{50.0, 50.0}));
  EXPECT_EQ(sim.field.initial_energy, 0.5);
  EXPECT_EQ(sim.protocol.p, 0.1);
  EXPECT_EQ(sim.protocol.kind, ProtocolKind::leach);
  EXPECT_EQ(sim.radio.crossover, CrossoverMode::derived);
  EXPECT_NEAR(sim.radio.d0, 87.7058, 1e-4);
  EXPECT_EQ(sim.radio.packet_bits, 4000);
  EXPECT_EQ(sim.max_rounds, 10000);
  EXPECT_FALSE(sim.ehorm);
  EXPECT_FALSE(spec.compare);
  EXPECT_EQ(spec.seeds, std::vector<std::uint64_t>{1});
  EXPECT_EQ(sim.field.hetero_fraction, 0.0);
}

TEST(ParseConfig, UnparsableValueNamesKeyAndLine) {
  const auto e = config_error("# header\nnodes=abc\n");
  EXPECT_EQ(e.key(), "nodes");
  EXPECT_EQ(e.line(), 2);
  EXPECT_NE(std::string(e.what()).find("nodes"), std::string::npos);
}

TEST(ParseConfig, CommandLineOverridesFile) {
  const auto spec = parse_config("nodes=100\n", {{"nodes", "50"}});
  EXPECT_EQ(spec.simulation.field.node_count, 50);
  const auto e = config_error("", {{"nodes", "x"}});
  EXPECT_EQ(e.key(), "nodes");
  EXPECT_FALSE(e.line());
}

TEST(ParseConfig, UnknownAndMalformedLines) {
  auto e = config_error("nodes=10\nspeed=3\n");
  EXPECT_EQ(e.key(), "speed");
  EXPECT_EQ(e.line(), 2);
  e = config_error("nodes 10\n");
  EXPECT_EQ(e.line(), 1);
  e = config_error("", {{"bogus", "1"}});
  EXPECT_EQ(e.key(), "bogus");
  e = config_error("p=0.2\np=0.3\n");
  EXPECT_EQ(e.key(), "p");
  EXPECT_EQ(e.line(), 2);
}

TEST(ParseConfig, CommentsWhitespaceAndFullSpec) {
  const auto spec = parse_config(
      "  protocol = SEP   # heterogeneous\n"
      "\n"
      "ehorm=on\ncompare=yes\nseeds=1,3,5-7\nrounds=250\nfield=200x50\n"
      "sink_y=10\ninitial_energy=1.5\np=0.05\nout=/tmp/somewhere\njobs=2\n");
  const auto& sim = spec.simulation;
  EXPECT_EQ(sim.protocol.kind, ProtocolKind::sep);
  EXPECT_TRUE(sim.ehorm);
  EXPECT_TRUE(spec.compare);
  EXPECT_EQ(spec.seeds, (std::vector<std::uint64_t>{1, 3, 5, 6, 7}));
  EXPECT_EQ(sim.max_rounds, 250);
  EXPECT_EQ(sim.field.width, 200.0);
  EXPECT_EQ(sim.field.height, 50.0);
  EXPECT_EQ(sim.field.sink(), (Point{100.0, 10.0}));
  EXPECT_EQ(sim.field.initial_energy, 1.5);
  EXPECT_EQ(sim.protocol.p, 0.05);
  EXPECT_EQ(spec.output_dir, "/tmp/somewhere");
  EXPECT_EQ(spec.jobs, 2u);
  // SEP brings the heterogeneous defaults along.
  EXPECT_EQ(sim.field.hetero_fraction, 0.1);
  EXPECT_EQ(sim.field.hetero_alpha, 1.0);
}

TEST(ParseConfig, ExplicitHeterogeneityWins) {
  const auto spec = parse_config("protocol=deec\nhetero_fraction=0.2\nhetero_alpha=3\n");
  EXPECT_EQ(spec.simulation.field.hetero_fraction, 0.2);
  EXPECT_EQ(spec.simulation.field.hetero_alpha, 3.0);
  const auto flagged = parse_config("hetero_alpha=3\n", {{"protocol", "sep"}});
  EXPECT_EQ(flagged.simulation.field.hetero_alpha, 3.0);
  EXPECT_EQ(flagged.simulation.field.hetero_fraction, 0.1);
}

TEST(ParseConfig, CrossoverModes) {
  EXPECT_EQ(parse_config("d0_mode=fixed\n").simulation.radio.d0, 87.0);
  EXPECT_EQ(parse_config("d0_mode=fixed\nd0=90\n").simulation.radio.d0, 90.0);
  EXPECT_EQ(config_error("d0=90\n").key(), "d0");
  EXPECT_EQ(config_error("d0_mode=sometimes\n").key(), "d0_mode");
  const auto derived = parse_config("e_fs=20e-12\n").simulation.radio;
  EXPECT_NEAR(derived.d0, std::sqrt(20.0 / 0.0013), 1e-9);
}

TEST(ParseConfig, ConstraintViolationsNameTheKey) {
  auto e = config_error("rounds=5\np=1.5\n");
  EXPECT_EQ(e.key(), "p");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(config_error("nodes=0\n").key(), "nodes");
  EXPECT_EQ(config_error("initial_energy=-1\n").key(), "initial_energy");
  EXPECT_EQ(config_error("e_da=0\n").key(), "e_da");
  EXPECT_EQ(config_error("hetero_fraction=1.5\n").key(), "hetero_fraction");
  EXPECT_EQ(config_error("protocol=aodv\n").key(), "protocol");
  EXPECT_EQ(config_error("ehorm=maybe\n").key(), "ehorm");
  EXPECT_EQ(config_error("rounds=-3\n").key(), "rounds");
}

TEST(ParseConfig, SeedLists) {
  EXPECT_EQ(parse_seed_list("4"), std::vector<std::uint64_t>{4});
  EXPECT_EQ(parse_seed_list(" 1-3 , 9"), (std::vector<std::uint64_t>{1, 2, 3, 9}));
  EXPECT_THROW(parse_seed_list(""), ConfigError);
  EXPECT_THROW(parse_seed_list("5-2"), ConfigError);
  EXPECT_THROW(parse_seed_list("a"), ConfigError);
  EXPECT_EQ(config_error("seeds=\n").key(), "seeds");
}

TEST(ParseConfig, EveryKeyIsDocumented) {
  for (const auto& key : config_keys()) {
    EXPECT_FALSE(key.name.empty());
    EXPECT_FALSE(key.help.empty()) << key.name;
  }
}

}  // namespace
}  // namespace wsn
