#pragma once

#include <optional>

#include "polydeme/config.hpp"
#include "polydeme/driver.hpp"

namespace polydeme {

/// NSGA-II: binary tournament by crowded comparison, SBX + polynomial
/// mutation, elitist (rank, crowding) survival over parents+offspring.
///
/// Parameters (with defaults): population_size 64,
/// mating_population_size 0.5 (fraction of the population entering the
/// mating pool), crossover_rate 0.9, crossover_eta 15, mutation_rate
/// 1/dimension, mutation_eta 20, mutation_scale 1.
class Nsga2 : public Driver {
public:
  Nsga2(Problem problem, const Params& params,
        std::shared_ptr<BudgetMeter> meter, std::uint64_t seed,
        std::optional<Population> initial = {});

  Population finalize() override;
  std::vector<Individual> nominate_delegates(std::size_t count) override;
  std::vector<Individual> deport(std::size_t count) override;
  void assimilate(std::vector<Individual> immigrants) override;

  const Population& population() const noexcept { return population_; }
  std::size_t target_size() const noexcept { return target_size_; }

protected:
  Population do_step() override;

private:
  // Indices of the current population, best to worst by (rank, crowding).
  std::vector<std::size_t> ranking_order() const;
  std::size_t tournament(const std::vector<std::size_t>& rank,
                         const std::vector<double>& crowd);

  Problem problem_;
  std::size_t target_size_;
  double mating_fraction_;
  double crossover_rate_;
  double crossover_eta_;
  double mutation_rate_;
  double mutation_eta_;
  double mutation_scale_;
  Population population_;
  std::vector<char> shielded_;  // freshly assimilated, exempt from next cut
  bool stepped_ = false;
};

}  // namespace polydeme
