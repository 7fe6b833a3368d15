#include "wsn/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>

#include "wsn/error.hpp"

namespace wsn {

SimulationConfig ExperimentSpec::config_for(std::uint64_t seed, bool ehorm) const {
  SimulationConfig config = simulation;
  config.field.rng_seed = seed;
  config.ehorm = ehorm;
  return config;
}

namespace {

struct Builder {
  ExperimentSpec spec;
  std::optional<double> sink_x;
  std::optional<double> sink_y;
  std::optional<double> d0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parse failures are reported with an empty key; the caller attaches it.
[[noreturn]] void bad_value(std::string_view value, std::string_view what) {
  throw ConfigError("", "cannot parse '" + std::string(value) + "' as " + std::string(what));
}

double to_double(std::string_view value) {
  double out = 0.0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size()) bad_value(value, "a number");
  return out;
}

std::int64_t to_int(std::string_view value) {
  std::int64_t out = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size()) bad_value(value, "an integer");
  return out;
}

std::uint64_t to_u64(std::string_view value) {
  std::uint64_t out = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size()) bad_value(value, "an unsigned integer");
  return out;
}

bool to_bool(std::string_view value) {
  std::string lower(value);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "1" || lower == "true" || lower == "on" || lower == "yes") return true;
  if (lower == "0" || lower == "false" || lower == "off" || lower == "no") return false;
  bad_value(value, "a boolean");
}

using Apply = void (*)(Builder&, std::string_view);

struct KeyRule {
  ConfigKey key;
  Apply apply;
};

// Order matters: "protocol" first (it selects the defaults), "field" before
// "width"/"height".
const KeyRule kRules[] = {
    {{"protocol", "leach | teen | sep | deec (default leach)"},
     [](Builder& b, std::string_view v) {
       const auto kind = parse_protocol(v);
       if (!kind) bad_value(v, "a protocol (leach, teen, sep, deec)");
       b.spec.simulation = default_simulation_config(*kind);
     }},
    {{"ehorm", "enable the threshold sleep/awake overlay (default off)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.ehorm = to_bool(v); }},
    {{"compare", "run every seed with the overlay off and on (default off)"},
     [](Builder& b, std::string_view v) { b.spec.compare = to_bool(v); }},
    {{"seeds", "comma-separated seeds and ranges, e.g. 1,2,10-20 (default 1)"},
     [](Builder& b, std::string_view v) { b.spec.seeds = parse_seed_list(v); }},
    {{"rounds", "maximum rounds per run (default 10000)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.max_rounds = to_int(v); }},
    {{"nodes", "number of sensor nodes (default 100)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.field.node_count = to_int(v); }},
    {{"field", "field size in metres, W or WxH (default 100x100)"},
     [](Builder& b, std::string_view v) {
       const auto x = v.find_first_of("xX");
       auto& field = b.spec.simulation.field;
       if (x == std::string_view::npos) {
         field.width = field.height = to_double(v);
       } else {
         field.width = to_double(trim(v.substr(0, x)));
         field.height = to_double(trim(v.substr(x + 1)));
       }
     }},
    {{"width", "field width in metres"},
     [](Builder& b, std::string_view v) { b.spec.simulation.field.width = to_double(v); }},
    {{"height", "field height in metres"},
     [](Builder& b, std::string_view v) { b.spec.simulation.field.height = to_double(v); }},
    {{"sink_x", "sink x in metres (default field centre)"},
     [](Builder& b, std::string_view v) { b.sink_x = to_double(v); }},
    {{"sink_y", "sink y in metres (default field centre)"},
     [](Builder& b, std::string_view v) { b.sink_y = to_double(v); }},
    {{"initial_energy", "initial energy of a normal node in joules (default 0.5)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.field.initial_energy = to_double(v); }},
    {{"hetero_fraction", "fraction m of advanced nodes (default 0.1 for sep/deec, else 0)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.field.hetero_fraction = to_double(v); }},
    {{"hetero_alpha", "extra energy factor alpha of advanced nodes (default 1 for sep/deec, else 0)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.field.hetero_alpha = to_double(v); }},
    {{"p", "cluster-head probability per round (default 0.1)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.protocol.p = to_double(v); }},
    {{"teen_hard_threshold", "TEEN hard threshold (default 100)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.protocol.teen.hard_threshold = to_double(v); }},
    {{"teen_soft_threshold", "TEEN soft threshold (default 2)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.protocol.teen.soft_threshold = to_double(v); }},
    {{"teen_sensed_min", "lower bound of synthetic TEEN readings (default 0)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.protocol.teen.sensed_min = to_double(v); }},
    {{"teen_sensed_max", "upper bound of synthetic TEEN readings (default 200)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.protocol.teen.sensed_max = to_double(v); }},
    {{"deec_p_opt", "DEEC reference probability (default p)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.protocol.deec_p_opt = to_double(v); }},
    {{"e_elec", "electronics energy, J/bit (default 50e-9)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.radio.e_elec = to_double(v); }},
    {{"e_fs", "free-space amplifier, J/bit/m^2 (default 10e-12)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.radio.e_fs = to_double(v); }},
    {{"e_mp", "multipath amplifier, J/bit/m^4 (default 0.0013e-12)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.radio.e_mp = to_double(v); }},
    {{"e_da", "aggregation energy, J/bit (default 5e-9)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.radio.e_da = to_double(v); }},
    {{"d0_mode", "derived (sqrt(e_fs/e_mp), default) | fixed"},
     [](Builder& b, std::string_view v) {
       if (v == "derived") b.spec.simulation.radio.crossover = CrossoverMode::derived;
       else if (v == "fixed") b.spec.simulation.radio.crossover = CrossoverMode::fixed;
       else bad_value(v, "a d0 mode (derived, fixed)");
     }},
    {{"d0", "crossover distance in metres, d0_mode=fixed only (default 87)"},
     [](Builder& b, std::string_view v) { b.d0 = to_double(v); }},
    {{"packet_bits", "data packet length in bits (default 4000)"},
     [](Builder& b, std::string_view v) { b.spec.simulation.radio.packet_bits = to_int(v); }},
    {{"out", "output directory (default wsn_out)"},
     [](Builder& b, std::string_view v) {
       if (v.empty()) bad_value(v, "a directory");
       b.spec.output_dir = std::filesystem::path(std::string(v));
     }},
    {{"jobs", "concurrent runs, 0 = hardware threads (default 0)"},
     [](Builder& b, std::string_view v) {
       const auto jobs = to_int(v);
       if (jobs < 0 || jobs > 4096) throw ConfigError("", "must be in [0, 4096]");
       b.spec.jobs = static_cast<unsigned>(jobs);
     }},
};

const KeyRule* find_rule(std::string_view name) {
  for (const auto& rule : kRules) {
    if (rule.key.name == name) return &rule;
  }
  return nullptr;
}

struct Entry {
  std::string value;
  std::optional<int> line;  // nullopt for command-line overrides
};

[[noreturn]] void rethrow_for(const std::string& key, const ConfigError& e, const Entry* entry) {
  // Strip any "key: " prefix the inner error already carries.
  std::string message = e.what();
  if (!e.key().empty() && message.rfind(e.key() + ": ", 0) == 0) message.erase(0, e.key().size() + 2);
  const bool from_cli = entry != nullptr && !entry->line;
  throw ConfigError(key, from_cli ? message + " (command line)" : message,
                    entry != nullptr ? entry->line : std::nullopt);
}

}  // namespace

std::span<const ConfigKey> config_keys() {
  static const std::vector<ConfigKey> keys = [] {
    std::vector<ConfigKey> out;
    for (const auto& rule : kRules) out.push_back(rule.key);
    return out;
  }();
  return keys;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  try {
    std::string_view rest = text;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = trim(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (item.empty()) continue;
      const auto dash = item.find('-');
      if (dash == std::string_view::npos) {
        seeds.push_back(to_u64(item));
        continue;
      }
      const auto lo = to_u64(trim(item.substr(0, dash)));
      const auto hi = to_u64(trim(item.substr(dash + 1)));
      if (hi < lo || hi - lo >= 1'000'000) {
        throw ConfigError("", "bad seed range '" + std::string(item) + "'");
      }
      for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    }
  } catch (const ConfigError& e) {
    throw ConfigError("seeds", e.what());
  }
  if (seeds.empty()) throw ConfigError("seeds", "at least one seed is required");
  return seeds;
}

ExperimentSpec parse_config(std::string_view text, const Overrides& overrides) {
  std::map<std::string, Entry> entries;

  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(line), "expected key=value", line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    if (find_rule(key) == nullptr) throw ConfigError(key, "unknown key", line_no);
    if (entries.contains(key)) throw ConfigError(key, "duplicate key", line_no);
    entries[key] = Entry{std::string(trim(line.substr(eq + 1))), line_no};
  }
  for (const auto& [key, value] : overrides) {
    if (find_rule(key) == nullptr) throw ConfigError(key, "unknown key (command line)");
    entries[key] = Entry{std::string(trim(value)), std::nullopt};
  }

  Builder builder;
  for (const auto& rule : kRules) {
    const auto it = entries.find(std::string(rule.key.name));
    if (it == entries.end()) continue;
    try {
      rule.apply(builder, it->second.value);
    } catch (const ConfigError& e) {
      rethrow_for(it->first, e, &it->second);
    }
  }

  auto entry_of = [&](const std::string& key) -> const Entry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  auto& sim = builder.spec.simulation;
  if (builder.sink_x || builder.sink_y) {
    sim.field.sink_position =
        Point{builder.sink_x.value_or(sim.field.width / 2.0), builder.sink_y.value_or(sim.field.height / 2.0)};
  }
  if (builder.d0) {
    if (sim.radio.crossover != CrossoverMode::fixed) {
      rethrow_for("d0", ConfigError("", "requires d0_mode=fixed"), entry_of("d0"));
    }
    sim.radio.d0 = *builder.d0;
  } else if (sim.radio.crossover == CrossoverMode::fixed) {
    sim.radio.d0 = 87.0;
  }
  sim.radio.resolve();

  try {
    sim.validate();
  } catch (const ConfigError& e) {
    rethrow_for(e.key(), e, entry_of(e.key()));
  }
  return builder.spec;
}

}  // namespace wsn
