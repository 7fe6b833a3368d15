#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wsn/sim_engine.hpp"

namespace wsn {

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::stability_period: return "stability_period";
    case Metric::network_lifetime: return "network_lifetime";
    case Metric::total_packets: return "total_packets";
  }
  return "?";
}

double metric_value(const SimulationResult& result, Metric metric) {
  const auto censored = [&](const std::optional<RoundIndex>& round) {
    return static_cast<double>(round.value_or(result.config.max_rounds));
  };
  switch (metric) {
    case Metric::stability_period: return censored(result.stability_period);
    case Metric::network_lifetime: return censored(result.network_lifetime);
    case Metric::total_packets: return static_cast<double>(result.total_packets);
  }
  return 0.0;
}

const MetricStats& BatchSummary::stats(Metric metric) const {
  switch (metric) {
    case Metric::stability_period: return stability_period;
    case Metric::network_lifetime: return network_lifetime;
    case Metric::total_packets: return total_packets;
  }
  throw std::invalid_argument("unknown metric");
}

namespace {

bool same_apart_from_seed(SimulationConfig a, SimulationConfig b) {
  a.field.rng_seed = 0;
  b.field.rng_seed = 0;
  return a == b;
}

bool reached(const SimulationResult& r, Metric metric) {
  switch (metric) {
    case Metric::stability_period: return r.stability_period.has_value();
    case Metric::network_lifetime: return r.network_lifetime.has_value();
    case Metric::total_packets: return true;
  }
  return true;
}

MetricStats stats_of(std::span<const SimulationResult> results, Metric metric) {
  std::vector<double> values;
  MetricStats stats;
  for (const auto& r : results) {
    values.push_back(metric_value(r, metric));
    if (!reached(r, metric)) ++stats.not_reached;
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  stats.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
  stats.median = n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  stats.min = values.front();
  stats.max = values.back();
  return stats;
}

}  // namespace

BatchSummary summarize_batch(std::span<const SimulationResult> results) {
  if (results.empty()) throw std::invalid_argument("summarize_batch needs at least one result");
  for (const auto& r : results) {
    if (!same_apart_from_seed(r.config, results.front().config)) {
      throw std::invalid_argument("summarize_batch: results differ in more than the seed");
    }
  }
  BatchSummary summary;
  summary.runs = results.size();
  summary.stability_period = stats_of(results, Metric::stability_period);
  summary.network_lifetime = stats_of(results, Metric::network_lifetime);
  summary.total_packets = stats_of(results, Metric::total_packets);
  return summary;
}

PairedComparison compare_paired(std::span<const SimulationResult> variant,
                                std::span<const SimulationResult> baseline, Metric metric) {
  if (variant.size() != baseline.size() || variant.empty()) {
    throw std::invalid_argument("compare_paired needs two equally sized, non-empty lists");
  }
  PairedComparison out;
  out.pairs = variant.size();
  double delta_sum = 0.0;
  for (std::size_t i = 0; i < variant.size(); ++i) {
    if (variant[i].config.field.rng_seed != baseline[i].config.field.rng_seed) {
      throw std::invalid_argument("compare_paired: pair " + std::to_string(i) + " has mismatched seeds");
    }
    const double delta = metric_value(variant[i], metric) - metric_value(baseline[i], metric);
    out.deltas.push_back(delta);
    delta_sum += delta;
    if (delta > 0) ++out.wins;
    else if (delta < 0) ++out.losses;
    else ++out.ties;
  }
  const auto pairs = static_cast<double>(out.pairs);
  out.win_rate = static_cast<double>(out.wins) / pairs;
  out.non_loss_rate = static_cast<double>(out.wins + out.ties) / pairs;
  out.mean_delta = delta_sum / pairs;
  return out;
}

}  // namespace wsn
