#include "polydeme/core.hpp"

#include <algorithm>
#include <cmath>

namespace polydeme {

bool Problem::in_bounds(const Genotype& g) const {
  if (g.size() != dimension) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < bounds[i].first || g[i] > bounds[i].second) return false;
  }
  return true;
}

double Problem::domain_diagonal() const {
  double sum = 0.0;
  for (const auto& [lo, hi] : bounds) sum += (hi - lo) * (hi - lo);
  return std::sqrt(sum);
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominates: objective length mismatch");
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly_better = true;
  }
  return strictly_better;
}

namespace {

template <typename GetObjs>
std::vector<std::size_t> nondominated_indices(std::size_t n, GetObjs objs) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < n && !dominated; ++j) {
      if (j != i && dominates(objs(j), objs(i))) dominated = true;
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

}  // namespace

std::vector<ObjectiveVector> objectives_of(const Population& pop) {
  std::vector<ObjectiveVector> out;
  out.reserve(pop.size());
  for (const auto& ind : pop) out.push_back(ind.objs());
  return out;
}

Population nondominated_filter(const Population& pop) {
  for (const auto& ind : pop) {
    if (!ind.evaluated())
      throw std::invalid_argument(
          "nondominated_filter: unevaluated population member");
  }
  const auto keep = nondominated_indices(
      pop.size(), [&](std::size_t i) -> const ObjectiveVector& {
        return *pop[i].objectives;
      });
  Population out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(pop[i]);
  return out;
}

std::vector<ObjectiveVector> nondominated_filter(
    const std::vector<ObjectiveVector>& points) {
  const auto keep = nondominated_indices(
      points.size(),
      [&](std::size_t i) -> const ObjectiveVector& { return points[i]; });
  std::vector<ObjectiveVector> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(points[i]);
  return out;
}

Individual& evaluate(const Problem& problem, Individual& ind,
                     BudgetMeter& meter) {
  if (ind.evaluated()) return ind;
  if (ind.genotype.size() != problem.dimension)
    throw std::invalid_argument("evaluate: genotype dimension mismatch");
  if (!problem.in_bounds(ind.genotype))
    throw std::domain_error("evaluate: genotype out of bounds for problem " +
                            problem.name);
  ObjectiveVector v = problem.evaluator(ind.genotype);
  if (v.size() != problem.objective_count)
    throw std::runtime_error("evaluate: evaluator returned wrong arity");
  for (double x : v) {
    if (!std::isfinite(x))
      throw std::runtime_error("evaluate: non-finite objective value");
  }
  ind.objectives = std::move(v);
  meter.note_evaluation();
  return ind;
}

void evaluate_all(const Problem& problem, Population& pop, BudgetMeter& meter) {
  for (auto& ind : pop) evaluate(problem, ind, meter);
}

Genotype clip_to_bounds(const Problem& problem, Genotype g) {
  if (g.size() != problem.dimension)
    throw std::invalid_argument("clip_to_bounds: genotype dimension mismatch");
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = std::clamp(g[i], problem.bounds[i].first, problem.bounds[i].second);
  }
  return g;
}

}  // namespace polydeme
