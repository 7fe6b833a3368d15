// Writes the per-round CSV of one base-protocol run using only the core
// library; the sleep/awake overlay is not linked into this binary.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wsn/error.hpp"
#include "wsn/round_csv.hpp"
#include "wsn/sim_engine.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Base-protocol trace without the sleep overlay"};
  std::string protocol = "leach";
  std::uint64_t seed = 1;
  std::int64_t rounds = 10000;
  std::int64_t nodes = 100;
  std::string out;
  app.add_option("--protocol", protocol, "leach | teen | sep | deec");
  app.add_option("--seed", seed, "Run seed");
  app.add_option("--rounds", rounds, "Maximum rounds");
  app.add_option("--nodes", nodes, "Number of nodes");
  app.add_option("out", out, "CSV output path")->required();
  CLI11_PARSE(app, argc, argv);

  const auto kind = wsn::parse_protocol(protocol);
  if (!kind) {
    std::cerr << "unknown protocol " << protocol << '\n';
    return 1;
  }
  wsn::SimulationConfig config = wsn::default_simulation_config(*kind);
  config.field.rng_seed = seed;
  config.field.node_count = nodes;
  config.max_rounds = rounds;
  try {
    wsn::Simulation simulation{config};
    wsn::write_round_csv(simulation.run(), out);
  } catch (const wsn::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const wsn::IoError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
