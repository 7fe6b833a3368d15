#include <memory>

#include "wsn/ehorm.hpp"
#include "wsn/sim_engine.hpp"

namespace wsn {

SimulationResult run_simulation(const SimulationConfig& config, SimOptions options) {
  std::unique_ptr<SleepScheduler> scheduler;
  if (config.ehorm) scheduler = std::make_unique<ThresholdSleepScheduler>(config.radio);
  Simulation simulation{config, std::move(scheduler), std::move(options)};
  return simulation.run();
}

}  // namespace wsn
