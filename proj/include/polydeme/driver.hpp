#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "polydeme/core.hpp"
#include "polydeme/rng.hpp"

namespace polydeme {

class Driver;

/// Message emitted by a driver after each step: a snapshot of its current
/// population, the number of first-time evaluations the step performed,
/// and the three services a meta-model may invoke. Valid until the
/// driver is destroyed; services act on the live driver, not the
/// snapshot.
class Proxy {
public:
  Proxy(Population snapshot, std::uint64_t step_cost, Driver* driver)
      : population_(std::move(snapshot)), step_cost_(step_cost),
        driver_(driver) {}

  const Population& population() const noexcept { return population_; }
  std::uint64_t step_cost() const noexcept { return step_cost_; }

  std::vector<Individual> nominate_delegates(std::size_t count) const;
  std::vector<Individual> deport(std::size_t count);
  void assimilate(std::vector<Individual> immigrants);

private:
  Population population_;
  std::uint64_t step_cost_;
  Driver* driver_;
};

/// A single- or multi-deme algorithm advancing in atomic steps under a
/// shared budget meter. Meta-models interact with inner drivers only
/// through step/finalize and the proxy services; both HGS and IMGA are
/// themselves drivers, which is what makes chains like IMGA+HGS+NSGAII
/// composable.
class Driver {
public:
  Driver(std::shared_ptr<BudgetMeter> meter, std::uint64_t seed)
      : meter_(std::move(meter)), rng_(seed) {}
  virtual ~Driver() = default;
  Driver(const Driver&) = delete;
  Driver& operator=(const Driver&) = delete;

  /// Advances by exactly one step (generation / swarm iteration /
  /// meta-epoch). The returned proxy's step_cost is measured from the
  /// meter, so it accounts for every first-time evaluation the step
  /// performed, including lazy evaluation of an initial population.
  Proxy step() {
    const std::uint64_t before = meter_->evaluations();
    Population snapshot = do_step();
    return Proxy(std::move(snapshot), meter_->evaluations() - before, this);
  }

  /// Result population. Idempotent; requires at least one prior step.
  virtual Population finalize() = 0;

  /// Up to `count` most promising individuals by the driver's own
  /// ranking, without removing them.
  virtual std::vector<Individual> nominate_delegates(std::size_t count) = 0;

  /// Removes and returns `count` emigrants (the driver's top-ranked).
  /// count must be smaller than the current population.
  virtual std::vector<Individual> deport(std::size_t count) = 0;

  /// Merges immigrants into the population. Immigrants are exempt from
  /// size-driven displacement during the step that follows.
  virtual void assimilate(std::vector<Individual> immigrants) = 0;

  BudgetMeter& meter() noexcept { return *meter_; }
  const std::shared_ptr<BudgetMeter>& meter_ptr() const noexcept {
    return meter_;
  }

protected:
  virtual Population do_step() = 0;
  Rng& rng() noexcept { return rng_; }

private:
  std::shared_ptr<BudgetMeter> meter_;
  Rng rng_;
};

inline std::vector<Individual> Proxy::nominate_delegates(
    std::size_t count) const {
  return driver_->nominate_delegates(count);
}

inline std::vector<Individual> Proxy::deport(std::size_t count) {
  return driver_->deport(count);
}

inline void Proxy::assimilate(std::vector<Individual> immigrants) {
  driver_->assimilate(std::move(immigrants));
}

}  // namespace polydeme
