#pragma once

#include <cstddef>
#include <vector>

#include "polydeme/core.hpp"

namespace polydeme {

/// Nondomination ranks and crowding distances for one set of objective
/// vectors. rank[i] == 0 means nondominated; crowding is computed within
/// each front, boundary points get +infinity.
struct ParetoRanking {
  std::vector<std::size_t> rank;
  std::vector<double> crowding;
  std::vector<std::vector<std::size_t>> fronts;
};

ParetoRanking pareto_ranking(const std::vector<ObjectiveVector>& objs);

/// Crowding distances of one front (indices into objs).
std::vector<double> crowding_of_front(const std::vector<ObjectiveVector>& objs,
                                      const std::vector<std::size_t>& front);

/// Crowded-comparison: lower rank wins, then larger crowding.
/// Returns true when (rank_a, crowd_a) is strictly better.
inline bool crowded_less(std::size_t rank_a, double crowd_a, std::size_t rank_b,
                         double crowd_b) {
  if (rank_a != rank_b) return rank_a < rank_b;
  return crowd_a > crowd_b;
}

/// Indices sorted best-to-worst by (rank, crowding), stable on ties.
std::vector<std::size_t> crowded_order(const ParetoRanking& ranking);

}  // namespace polydeme
