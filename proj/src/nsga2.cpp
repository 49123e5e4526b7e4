#include "polydeme/nsga2.hpp"

#include <cmath>

#include "polydeme/pareto.hpp"
#include "polydeme/variation.hpp"

namespace polydeme {

Nsga2::Nsga2(Problem problem, const Params& params,
             std::shared_ptr<BudgetMeter> meter, std::uint64_t seed,
             std::optional<Population> initial)
    : Driver(std::move(meter), seed), problem_(std::move(problem)) {
  mating_fraction_ = params.value("mating_population_size", 0.5);
  crossover_rate_ = params.value("crossover_rate", 0.9);
  crossover_eta_ = params.value("crossover_eta", 15.0);
  mutation_eta_ = params.value("mutation_eta", 20.0);
  mutation_scale_ = params.value("mutation_scale", 1.0);
  mutation_rate_ = params.value("mutation_rate",
                                1.0 / static_cast<double>(problem_.dimension));
  if (initial) {
    population_ = std::move(*initial);
    target_size_ = population_.size();
  } else {
    target_size_ = params.value("population_size", std::size_t{64});
    population_ = random_population(problem_, target_size_, rng());
  }
  if (population_.empty())
    throw config_error("NSGAII requires a nonempty population");
  shielded_.assign(population_.size(), 0);
}

std::size_t Nsga2::tournament(const std::vector<std::size_t>& rank,
                              const std::vector<double>& crowd) {
  const std::size_t a = rng().index(rank.size());
  const std::size_t b = rng().index(rank.size());
  if (crowded_less(rank[a], crowd[a], rank[b], crowd[b])) return a;
  if (crowded_less(rank[b], crowd[b], rank[a], crowd[a])) return b;
  return rng().chance(0.5) ? a : b;
}

Population Nsga2::do_step() {
  evaluate_all(problem_, population_, meter());
  const auto parent_objs = objectives_of(population_);
  const auto parent_ranking = pareto_ranking(parent_objs);

  const auto pool_size = static_cast<std::size_t>(std::max(
      2.0, std::ceil(mating_fraction_ * static_cast<double>(population_.size()))));
  std::vector<std::size_t> pool;
  pool.reserve(pool_size);
  for (std::size_t k = 0; k < pool_size; ++k)
    pool.push_back(tournament(parent_ranking.rank, parent_ranking.crowding));

  Population offspring;
  offspring.reserve(target_size_);
  while (offspring.size() < target_size_) {
    const auto& pa = population_[pool[rng().index(pool.size())]];
    const auto& pb = population_[pool[rng().index(pool.size())]];
    auto [c1, c2] =
        sbx_crossover(pa, pb, problem_, crossover_eta_, crossover_rate_, rng());
    offspring.push_back(polynomial_mutation(std::move(c1), problem_,
                                            mutation_eta_, mutation_rate_,
                                            mutation_scale_, rng()));
    if (offspring.size() < target_size_) {
      offspring.push_back(polynomial_mutation(std::move(c2), problem_,
                                              mutation_eta_, mutation_rate_,
                                              mutation_scale_, rng()));
    }
  }
  evaluate_all(problem_, offspring, meter());

  Population merged = population_;
  merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                std::make_move_iterator(offspring.end()));
  std::vector<char> shield = shielded_;
  shield.resize(merged.size(), 0);

  // Survival: shielded immigrants first, then rank-fill with crowding
  // truncation of the split front.
  Population next;
  next.reserve(target_size_);
  std::vector<char> taken(merged.size(), 0);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (shield[i]) {
      next.push_back(merged[i]);
      taken[i] = 1;
    }
  }
  if (next.size() < target_size_) {
    const auto objs = objectives_of(merged);
    const auto ranking = pareto_ranking(objs);
    std::size_t remaining = target_size_ - next.size();
    for (const auto& front : ranking.fronts) {
      std::vector<std::size_t> open;
      for (auto i : front)
        if (!taken[i]) open.push_back(i);
      if (open.empty()) continue;
      if (open.size() <= remaining) {
        for (auto i : open) next.push_back(merged[i]);
        remaining -= open.size();
      } else {
        std::stable_sort(open.begin(), open.end(),
                         [&](std::size_t a, std::size_t b) {
                           return ranking.crowding[a] > ranking.crowding[b];
                         });
        for (std::size_t k = 0; k < remaining; ++k)
          next.push_back(merged[open[k]]);
        remaining = 0;
      }
      if (remaining == 0) break;
    }
  }
  population_ = std::move(next);
  shielded_.assign(population_.size(), 0);
  stepped_ = true;
  return population_;
}

std::vector<std::size_t> Nsga2::ranking_order() const {
  const auto ranking = pareto_ranking(objectives_of(population_));
  return crowded_order(ranking);
}

Population Nsga2::finalize() {
  if (!stepped_) throw std::logic_error("finalize before first step");
  return population_;
}

std::vector<Individual> Nsga2::nominate_delegates(std::size_t count) {
  const auto order = ranking_order();
  std::vector<Individual> out;
  for (std::size_t k = 0; k < order.size() && k < count; ++k)
    out.push_back(population_[order[k]]);
  return out;
}

std::vector<Individual> Nsga2::deport(std::size_t count) {
  if (count >= population_.size())
    throw std::invalid_argument("deport: count must be below population size");
  const auto order = ranking_order();
  std::vector<std::size_t> leaving(order.begin(), order.begin() + count);
  std::vector<Individual> out;
  out.reserve(count);
  for (auto i : leaving) out.push_back(population_[i]);
  std::sort(leaving.rbegin(), leaving.rend());
  for (auto i : leaving) {
    population_.erase(population_.begin() + static_cast<std::ptrdiff_t>(i));
    shielded_.erase(shielded_.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return out;
}

void Nsga2::assimilate(std::vector<Individual> immigrants) {
  for (auto& ind : immigrants) {
    if (ind.genotype.size() != problem_.dimension)
      throw std::invalid_argument("assimilate: genotype dimension mismatch");
    population_.push_back(std::move(ind));
    shielded_.push_back(1);
  }
}

}  // namespace polydeme
