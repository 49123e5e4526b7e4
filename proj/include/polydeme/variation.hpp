#pragma once

#include <utility>

#include "polydeme/core.hpp"
#include "polydeme/rng.hpp"

namespace polydeme {

/// Simulated binary crossover. Each variable is crossed with probability
/// `rate` (otherwise copied from the parents); children are clipped to
/// the problem bounds. Children whose genotype ends up identical to a
/// parent keep that parent's objectives.
std::pair<Individual, Individual> sbx_crossover(const Individual& a,
                                                const Individual& b,
                                                const Problem& problem,
                                                double eta, double rate,
                                                Rng& rng);

/// Bounded polynomial mutation. Each variable mutates with probability
/// `rate`; `scale` shrinks the perturbation width (used by hierarchic
/// meta-models to tighten search per tree level). A variable sitting on
/// a bound can only move inward. Unchanged genotypes keep their
/// objectives.
Individual polynomial_mutation(Individual ind, const Problem& problem,
                               double eta, double rate, double scale, Rng& rng);

/// Uniform random population within the problem bounds, unevaluated.
Population random_population(const Problem& problem, std::size_t size,
                             Rng& rng);

}  // namespace polydeme
