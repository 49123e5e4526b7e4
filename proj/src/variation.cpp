#include "polydeme/variation.hpp"

#include <cmath>

namespace polydeme {

std::pair<Individual, Individual> sbx_crossover(const Individual& a,
                                                const Individual& b,
                                                const Problem& problem,
                                                double eta, double rate,
                                                Rng& rng) {
  const std::size_t n = problem.dimension;
  Genotype ga = a.genotype;
  Genotype gb = b.genotype;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rng.chance(rate)) continue;
    const double x1 = a.genotype[i];
    const double x2 = b.genotype[i];
    if (x1 == x2) continue;
    const double u = rng.uniform();
    const double beta =
        u <= 0.5 ? std::pow(2.0 * u, 1.0 / (eta + 1.0))
                 : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
    const double lo = std::min(x1, x2);
    const double hi = std::max(x1, x2);
    const double c1 = 0.5 * ((lo + hi) - beta * (hi - lo));
    const double c2 = 0.5 * ((lo + hi) + beta * (hi - lo));
    // Keep each child on its own parent's side of the midpoint.
    if (x1 <= x2) {
      ga[i] = c1;
      gb[i] = c2;
    } else {
      ga[i] = c2;
      gb[i] = c1;
    }
    const auto [blo, bhi] = problem.bounds[i];
    ga[i] = std::clamp(ga[i], blo, bhi);
    gb[i] = std::clamp(gb[i], blo, bhi);
  }
  Individual child_a = ga == a.genotype ? a : Individual(std::move(ga));
  Individual child_b = gb == b.genotype ? b : Individual(std::move(gb));
  return {std::move(child_a), std::move(child_b)};
}

Individual polynomial_mutation(Individual ind, const Problem& problem,
                               double eta, double rate, double scale,
                               Rng& rng) {
  bool changed = false;
  for (std::size_t i = 0; i < problem.dimension; ++i) {
    if (!rng.chance(rate)) continue;
    const auto [lo, hi] = problem.bounds[i];
    const double width = hi - lo;
    if (width <= 0.0) continue;
    const double x = ind.genotype[i];
    const double d1 = (x - lo) / width;
    const double d2 = (hi - x) / width;
    const double u = rng.uniform();
    double delta;
    if (u <= 0.5) {
      const double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
      delta = std::pow(v, 1.0 / (eta + 1.0)) - 1.0;
    } else {
      const double v = 2.0 * (1.0 - u) +
                       2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
      delta = 1.0 - std::pow(v, 1.0 / (eta + 1.0));
    }
    const double y = std::clamp(x + scale * delta * width, lo, hi);
    if (y != x) {
      ind.genotype[i] = y;
      changed = true;
    }
  }
  if (changed) ind.objectives.reset();
  return ind;
}

Population random_population(const Problem& problem, std::size_t size,
                             Rng& rng) {
  Population pop;
  pop.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    Genotype g(problem.dimension);
    for (std::size_t i = 0; i < problem.dimension; ++i) {
      g[i] = rng.uniform(problem.bounds[i].first, problem.bounds[i].second);
    }
    pop.emplace_back(std::move(g));
  }
  return pop;
}

}  // namespace polydeme
