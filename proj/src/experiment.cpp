#include "wsn/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "wsn/error.hpp"
#include "wsn/round_csv.hpp"

namespace wsn {

std::string variant_label(ProtocolKind kind, bool ehorm) {
  return (ehorm ? "i" : "") + std::string(protocol_name(kind));
}

std::vector<SimulationResult> run_batch(std::span<const SimulationConfig> configs, unsigned jobs) {
  std::vector<SimulationResult> results(configs.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, configs.size())));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(configs.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        results[i] = run_simulation(configs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

namespace {

std::string round_or_sentinel(const std::optional<RoundIndex>& round) {
  return round ? std::to_string(*round) : std::string("not_reached");
}

constexpr Metric kMetrics[] = {Metric::stability_period, Metric::network_lifetime,
                               Metric::total_packets};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace

std::string format_batch_summary(const ExperimentSpec& spec, std::span<const RunRecord> runs) {
  std::ostringstream out;
  const auto& sim = spec.simulation;
  out << "protocol=" << protocol_name(sim.protocol.kind) << '\n';
  out << "nodes=" << sim.field.node_count << '\n';
  out << "max_rounds=" << sim.max_rounds << '\n';
  out << "seeds=" << spec.seeds.size() << '\n';

  std::vector<std::string> labels;
  for (const auto& run : runs) {
    if (std::find(labels.begin(), labels.end(), run.label) == labels.end()) labels.push_back(run.label);
  }
  out << "variants=";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
  out << '\n';

  for (const auto& label : labels) {
    std::vector<SimulationResult> arm;
    for (const auto& run : runs) {
      if (run.label == label) arm.push_back(run.result);
    }
    const BatchSummary summary = summarize_batch(arm);
    out << label << ".runs=" << summary.runs << '\n';
    for (Metric metric : kMetrics) {
      const MetricStats& s = summary.stats(metric);
      const std::string prefix = label + "." + std::string(metric_name(metric));
      out << prefix << ".mean=" << format_significant(s.mean) << '\n';
      out << prefix << ".median=" << format_significant(s.median) << '\n';
      out << prefix << ".min=" << format_significant(s.min) << '\n';
      out << prefix << ".max=" << format_significant(s.max) << '\n';
      out << prefix << ".not_reached=" << s.not_reached << '\n';
    }
  }

  for (const auto& run : runs) {
    const std::string prefix = "run." + run.label + ".seed" + std::to_string(run.seed);
    out << prefix << ".csv=" << run.csv.filename().string() << '\n';
    out << prefix << ".stability_period=" << round_or_sentinel(run.result.stability_period) << '\n';
    out << prefix << ".network_lifetime=" << round_or_sentinel(run.result.network_lifetime) << '\n';
    out << prefix << ".total_packets=" << run.result.total_packets << '\n';
  }
  return out.str();
}

std::string format_paired_summary(std::string_view baseline_label, std::string_view variant_label,
                                  std::span<const SimulationResult> baseline,
                                  std::span<const SimulationResult> variant) {
  std::ostringstream out;
  out << "baseline=" << baseline_label << '\n';
  out << "variant=" << variant_label << '\n';
  out << "pairs=" << variant.size() << '\n';
  std::vector<PairedComparison> comparisons;
  for (Metric metric : kMetrics) {
    const PairedComparison c = compare_paired(variant, baseline, metric);
    const std::string prefix(metric_name(metric));
    out << prefix << ".wins=" << c.wins << '\n';
    out << prefix << ".ties=" << c.ties << '\n';
    out << prefix << ".losses=" << c.losses << '\n';
    out << prefix << ".win_rate=" << format_significant(c.win_rate) << '\n';
    out << prefix << ".non_loss_rate=" << format_significant(c.non_loss_rate) << '\n';
    out << prefix << ".mean_delta=" << format_significant(c.mean_delta) << '\n';
    comparisons.push_back(c);
  }
  for (std::size_t i = 0; i < variant.size(); ++i) {
    const std::string prefix = "pair.seed" + std::to_string(variant[i].config.field.rng_seed);
    for (std::size_t m = 0; m < comparisons.size(); ++m) {
      out << prefix << '.' << metric_name(kMetrics[m])
          << ".delta=" << format_significant(comparisons[m].deltas[i]) << '\n';
    }
  }
  return out.str();
}

ExperimentOutputs execute_experiment(const ExperimentSpec& spec) {
  if (spec.seeds.empty()) throw ConfigError("seeds", "at least one seed is required");
  spec.simulation.validate();

  const auto& dir = spec.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError(dir.string(), ec ? ec.message() : "not a directory");
  }

  std::vector<bool> arms;
  if (spec.compare) arms = {false, true};
  else arms = {spec.simulation.ehorm};

  const ProtocolKind kind = spec.simulation.protocol.kind;
  std::vector<SimulationConfig> configs;
  ExperimentOutputs outputs;
  for (bool ehorm : arms) {
    for (std::uint64_t seed : spec.seeds) {
      configs.push_back(spec.config_for(seed, ehorm));
      RunRecord record;
      record.label = variant_label(kind, ehorm);
      record.seed = seed;
      record.csv = dir / (record.label + "_seed" + std::to_string(seed) + ".csv");
      outputs.runs.push_back(std::move(record));
    }
  }

  std::vector<SimulationResult> results = run_batch(configs, spec.jobs);
  for (std::size_t i = 0; i < results.size(); ++i) {
    outputs.runs[i].result = std::move(results[i]);
    write_round_csv(outputs.runs[i].result, outputs.runs[i].csv);
  }

  outputs.summary = dir / "summary.txt";
  write_text(outputs.summary, format_batch_summary(spec, outputs.runs));

  if (spec.compare) {
    const std::size_t n = spec.seeds.size();
    std::vector<SimulationResult> baseline, variant;
    for (std::size_t i = 0; i < n; ++i) {
      baseline.push_back(outputs.runs[i].result);
      variant.push_back(outputs.runs[n + i].result);
    }
    outputs.paired = dir / "paired.txt";
    write_text(*outputs.paired, format_paired_summary(variant_label(kind, false),
                                                     variant_label(kind, true), baseline, variant));
  }
  return outputs;
}

int run_experiment(const ExperimentSpec& spec, std::ostream& log) {
  try {
    const ExperimentOutputs outputs = execute_experiment(spec);
    log << "wrote " << outputs.runs.size() << " run(s) and " << outputs.summary.string() << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    log << "i/o error: " << e.what() << '\n';
    return kExitIoError;
  }
}

}  // namespace wsn
