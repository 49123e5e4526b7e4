#include "polydeme/spea2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polydeme/variation.hpp"

namespace polydeme {

namespace {

double sq_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

Spea2Fitness spea2_fitness(const std::vector<ObjectiveVector>& objs,
                           std::size_t k) {
  const std::size_t n = objs.size();
  Spea2Fitness out;
  out.strength.assign(n, 0.0);
  out.raw.assign(n, 0.0);
  out.density.assign(n, 0.0);
  out.fitness.assign(n, 0.0);
  if (n == 0) return out;

  std::vector<std::vector<bool>> dom(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && dominates(objs[i], objs[j])) {
        dom[i][j] = true;
        out.strength[i] += 1.0;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dom[j][i]) out.raw[i] += out.strength[j];
    }
  }
  const std::size_t kk = std::clamp<std::size_t>(k, 1, n > 1 ? n - 1 : 1);
  std::vector<double> dist;
  dist.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    dist.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) dist.push_back(sq_distance(objs[i], objs[j]));
    }
    double sigma = 0.0;
    if (!dist.empty()) {
      std::nth_element(dist.begin(), dist.begin() + (kk - 1), dist.end());
      sigma = std::sqrt(dist[kk - 1]);
    }
    out.density[i] = 1.0 / (sigma + 2.0);
    out.fitness[i] = out.raw[i] + out.density[i];
  }
  return out;
}

std::vector<std::size_t> spea2_truncate(const std::vector<ObjectiveVector>& objs,
                                        std::size_t capacity,
                                        const std::vector<char>& shielded) {
  const std::size_t n = objs.size();
  std::vector<std::size_t> alive(n);
  std::iota(alive.begin(), alive.end(), std::size_t{0});
  auto is_shielded = [&](std::size_t i) {
    return i < shielded.size() && shielded[i];
  };
  while (alive.size() > capacity) {
    // Sorted distance profile per survivor, compared lexicographically.
    std::vector<std::vector<double>> profiles(alive.size());
    for (std::size_t a = 0; a < alive.size(); ++a) {
      profiles[a].reserve(alive.size() - 1);
      for (std::size_t b = 0; b < alive.size(); ++b) {
        if (a != b)
          profiles[a].push_back(sq_distance(objs[alive[a]], objs[alive[b]]));
      }
      std::sort(profiles[a].begin(), profiles[a].end());
    }
    std::size_t victim = alive.size();
    for (std::size_t a = 0; a < alive.size(); ++a) {
      if (is_shielded(alive[a])) continue;
      if (victim == alive.size() || profiles[a] < profiles[victim]) victim = a;
    }
    if (victim == alive.size()) break;  // everything left is shielded
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(victim));
  }
  return alive;
}

Spea2::Spea2(Problem problem, const Params& params,
             std::shared_ptr<BudgetMeter> meter, std::uint64_t seed,
             std::optional<Population> initial)
    : Driver(std::move(meter), seed), problem_(std::move(problem)) {
  crossover_rate_ = params.value("crossover_rate", 0.9);
  crossover_eta_ = params.value("crossover_eta", 15.0);
  mutation_eta_ = params.value("mutation_eta", 20.0);
  mutation_scale_ = params.value("mutation_scale", 1.0);
  mutation_rate_ = params.value("mutation_rate",
                                1.0 / static_cast<double>(problem_.dimension));
  if (initial) {
    population_ = std::move(*initial);
    pop_size_ = population_.size();
  } else {
    pop_size_ = params.value("population_size", std::size_t{64});
    population_ = random_population(problem_, pop_size_, rng());
  }
  if (population_.empty())
    throw config_error("SPEA2 requires a nonempty population");
  archive_capacity_ = params.value("archive_size", pop_size_);
  knn_ = static_cast<std::size_t>(
      std::max(1.0, std::round(std::sqrt(2.0 * static_cast<double>(pop_size_)))));
}

Population Spea2::do_step() {
  evaluate_all(problem_, population_, meter());
  evaluate_all(problem_, archive_, meter());

  Population pool = population_;
  pool.insert(pool.end(), archive_.begin(), archive_.end());
  std::vector<char> shield(pool.size(), 0);
  for (std::size_t i = 0; i < archive_.size(); ++i)
    shield[population_.size() + i] = shielded_[i];

  const auto objs = objectives_of(pool);
  const auto fit = spea2_fitness(objs, knn_);

  // Environmental selection: nondominated members plus shielded
  // immigrants; truncate when overfull, pad with the best dominated
  // otherwise.
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (fit.raw[i] == 0.0 || shield[i]) selected.push_back(i);
  }
  if (selected.size() > archive_capacity_) {
    std::vector<ObjectiveVector> sel_objs;
    std::vector<char> sel_shield;
    sel_objs.reserve(selected.size());
    for (auto i : selected) {
      sel_objs.push_back(objs[i]);
      sel_shield.push_back(shield[i]);
    }
    const auto kept = spea2_truncate(sel_objs, archive_capacity_, sel_shield);
    std::vector<std::size_t> next;
    next.reserve(kept.size());
    for (auto k : kept) next.push_back(selected[k]);
    selected = std::move(next);
  } else if (selected.size() < archive_capacity_) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (fit.raw[i] != 0.0 && !shield[i]) rest.push_back(i);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
      return fit.fitness[a] < fit.fitness[b];
    });
    for (auto i : rest) {
      if (selected.size() >= archive_capacity_) break;
      selected.push_back(i);
    }
  }
  Population next_archive;
  std::vector<double> archive_fitness;
  next_archive.reserve(selected.size());
  for (auto i : selected) {
    next_archive.push_back(pool[i]);
    archive_fitness.push_back(fit.fitness[i]);
  }
  archive_ = std::move(next_archive);
  shielded_.assign(archive_.size(), 0);

  // Mating selection from the archive, then variation.
  auto tournament = [&]() -> const Individual& {
    const std::size_t a = rng().index(archive_.size());
    const std::size_t b = rng().index(archive_.size());
    if (archive_fitness[a] < archive_fitness[b]) return archive_[a];
    if (archive_fitness[b] < archive_fitness[a]) return archive_[b];
    return rng().chance(0.5) ? archive_[a] : archive_[b];
  };
  Population offspring;
  offspring.reserve(pop_size_);
  while (offspring.size() < pop_size_) {
    auto [c1, c2] = sbx_crossover(tournament(), tournament(), problem_,
                                  crossover_eta_, crossover_rate_, rng());
    offspring.push_back(polynomial_mutation(std::move(c1), problem_,
                                            mutation_eta_, mutation_rate_,
                                            mutation_scale_, rng()));
    if (offspring.size() < pop_size_) {
      offspring.push_back(polynomial_mutation(std::move(c2), problem_,
                                              mutation_eta_, mutation_rate_,
                                              mutation_scale_, rng()));
    }
  }
  evaluate_all(problem_, offspring, meter());
  population_ = std::move(offspring);
  stepped_ = true;
  return archive_;
}

std::vector<std::size_t> Spea2::ranking_order() const {
  const auto fit = spea2_fitness(objectives_of(archive_), knn_);
  std::vector<std::size_t> order(archive_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fit.fitness[a] < fit.fitness[b];
  });
  return order;
}

Population Spea2::finalize() {
  if (!stepped_) throw std::logic_error("finalize before first step");
  return archive_;
}

std::vector<Individual> Spea2::nominate_delegates(std::size_t count) {
  const auto order = ranking_order();
  std::vector<Individual> out;
  for (std::size_t k = 0; k < order.size() && k < count; ++k)
    out.push_back(archive_[order[k]]);
  return out;
}

std::vector<Individual> Spea2::deport(std::size_t count) {
  if (count >= archive_.size())
    throw std::invalid_argument("deport: count must be below population size");
  const auto order = ranking_order();
  std::vector<std::size_t> leaving(order.begin(), order.begin() + count);
  std::vector<Individual> out;
  out.reserve(count);
  for (auto i : leaving) out.push_back(archive_[i]);
  std::sort(leaving.rbegin(), leaving.rend());
  for (auto i : leaving) {
    archive_.erase(archive_.begin() + static_cast<std::ptrdiff_t>(i));
    shielded_.erase(shielded_.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return out;
}

void Spea2::assimilate(std::vector<Individual> immigrants) {
  for (auto& ind : immigrants) {
    if (ind.genotype.size() != problem_.dimension)
      throw std::invalid_argument("assimilate: genotype dimension mismatch");
    archive_.push_back(std::move(ind));
    shielded_.push_back(1);
  }
}

}  // namespace polydeme
