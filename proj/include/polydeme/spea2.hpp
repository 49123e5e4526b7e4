#pragma once

#include <optional>

#include "polydeme/config.hpp"
#include "polydeme/driver.hpp"

namespace polydeme {

/// SPEA2 fitness components over one point set: strength (individuals
/// dominated), raw fitness (sum of dominators' strengths, 0 iff
/// nondominated) and the k-th nearest neighbour density term.
struct Spea2Fitness {
  std::vector<double> strength;
  std::vector<double> raw;
  std::vector<double> density;
  std::vector<double> fitness;  // raw + density, lower is better
};

Spea2Fitness spea2_fitness(const std::vector<ObjectiveVector>& objs,
                           std::size_t k);

/// Iterative nearest-neighbour truncation of a mutually nondominated set
/// down to `capacity`. Each round removes the point whose sorted
/// distance-to-others profile is lexicographically smallest. Indices of
/// the survivors are returned in input order; `shielded` entries are
/// never removed.
std::vector<std::size_t> spea2_truncate(const std::vector<ObjectiveVector>& objs,
                                        std::size_t capacity,
                                        const std::vector<char>& shielded = {});

/// SPEA2 with the archive as the driver population: proxies snapshot the
/// archive, emigration and assimilation act on it, and the working
/// population is regenerated from the archive every generation.
///
/// Parameters: population_size 64, archive_size = population_size,
/// knn k = round(sqrt(2 * population_size)), plus the shared variation
/// parameters (see Nsga2).
class Spea2 : public Driver {
public:
  Spea2(Problem problem, const Params& params,
        std::shared_ptr<BudgetMeter> meter, std::uint64_t seed,
        std::optional<Population> initial = {});

  Population finalize() override;
  std::vector<Individual> nominate_delegates(std::size_t count) override;
  std::vector<Individual> deport(std::size_t count) override;
  void assimilate(std::vector<Individual> immigrants) override;

  const Population& archive() const noexcept { return archive_; }

protected:
  Population do_step() override;

private:
  std::vector<std::size_t> ranking_order() const;

  Problem problem_;
  std::size_t pop_size_;
  std::size_t archive_capacity_;
  std::size_t knn_;
  double crossover_rate_;
  double crossover_eta_;
  double mutation_rate_;
  double mutation_eta_;
  double mutation_scale_;
  Population population_;
  Population archive_;
  std::vector<char> shielded_;  // parallel to archive_
  bool stepped_ = false;
};

}  // namespace polydeme
