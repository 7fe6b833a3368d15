// Command-line front end: single runs, multi-seed batches and paired
// base-vs-overlay comparisons, written as per-round CSV plus summaries.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsn/config.hpp"
#include "wsn/error.hpp"
#include "wsn/experiment.hpp"
#include "wsn/kernels.hpp"

namespace {

std::string key_listing() {
  std::ostringstream out;
  out << "Config file keys (key=value, '#' comments; --set key=value overrides any):\n";
  for (const auto& key : wsn::config_keys()) {
    out << "  " << key.name << std::string(key.name.size() < 22 ? 22 - key.name.size() : 1, ' ')
        << key.help << '\n';
  }
  out << "\nExit codes: 0 success, 1 config error, 2 i/o error.\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based cluster routing simulator with threshold sleep/awake scheduling"};
  app.footer(key_listing());

  std::string config_path, protocol, ehorm, compare, seeds, rounds, nodes, field, out, jobs;
  std::vector<std::string> sets;
  app.add_option("--config", config_path, "Read key=value configuration from this file");
  app.add_option("--protocol", protocol, "leach | teen | sep | deec");
  app.add_flag("--ehorm{on}", ehorm, "Enable the threshold sleep overlay (--ehorm=off to disable)");
  app.add_flag("--compare{on}", compare, "Run each seed with the overlay off and on; write paired.txt");
  app.add_option("--seeds", seeds, "Seeds, e.g. 1,2,3 or 1-30");
  app.add_option("--rounds", rounds, "Maximum rounds per run");
  app.add_option("--nodes", nodes, "Number of sensor nodes");
  app.add_option("--field", field, "Field size in metres, W or WxH");
  app.add_option("--out", out, "Output directory");
  app.add_option("--jobs", jobs, "Concurrent runs (0 = hardware threads)");
  app.add_option("--set", sets, "Override any config key: --set key=value (repeatable)");
  bool show_kernels = false;
  app.add_flag("--kernels", show_kernels, "Print the selected geometry kernel variant and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? wsn::kExitOk : wsn::kExitConfigError;
  }

  if (show_kernels) {
    std::cout << wsn::kernels::active().name << '\n';
    return wsn::kExitOk;
  }

  std::string text;
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      std::cerr << "i/o error: " << config_path << ": cannot open config file\n";
      return wsn::kExitIoError;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  wsn::Overrides overrides;
  for (const auto& entry : sets) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      std::cerr << "config error: --set expects key=value, got '" << entry << "'\n";
      return wsn::kExitConfigError;
    }
    overrides.emplace_back(entry.substr(0, eq), entry.substr(eq + 1));
  }
  const std::pair<const char*, const std::string*> flags[] = {
      {"protocol", &protocol}, {"ehorm", &ehorm}, {"compare", &compare}, {"seeds", &seeds},
      {"rounds", &rounds},     {"nodes", &nodes}, {"field", &field},     {"out", &out},
      {"jobs", &jobs},
  };
  for (const auto& [key, value] : flags) {
    if (!value->empty()) overrides.emplace_back(key, *value);
  }

  wsn::ExperimentSpec spec;
  try {
    spec = wsn::parse_config(text, overrides);
  } catch (const wsn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return wsn::kExitConfigError;
  }
  return wsn::run_experiment(spec, std::cerr);
}
