#include "polydeme/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace polydeme {

ParetoRanking pareto_ranking(const std::vector<ObjectiveVector>& objs) {
  const std::size_t n = objs.size();
  ParetoRanking out;
  out.rank.assign(n, 0);
  out.crowding.assign(n, 0.0);
  if (n == 0) return out;

  // Deb's fast nondominated sort.
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> domination_count(n, 0);
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (dominates(objs[i], objs[j])) {
        dominated_by[i].push_back(j);
      } else if (dominates(objs[j], objs[i])) {
        ++domination_count[i];
      }
    }
    if (domination_count[i] == 0) {
      out.rank[i] = 0;
      current.push_back(i);
    }
  }
  std::size_t level = 0;
  while (!current.empty()) {
    out.fronts.push_back(current);
    std::vector<std::size_t> next;
    for (auto i : current) {
      for (auto j : dominated_by[i]) {
        if (--domination_count[j] == 0) {
          out.rank[j] = level + 1;
          next.push_back(j);
        }
      }
    }
    current = std::move(next);
    ++level;
  }

  for (const auto& front : out.fronts) {
    const auto cd = crowding_of_front(objs, front);
    for (std::size_t k = 0; k < front.size(); ++k) out.crowding[front[k]] = cd[k];
  }
  return out;
}

std::vector<double> crowding_of_front(const std::vector<ObjectiveVector>& objs,
                                      const std::vector<std::size_t>& front) {
  const std::size_t m = front.size();
  std::vector<double> cd(m, 0.0);
  if (m == 0) return cd;
  const std::size_t n_obj = objs[front[0]].size();
  if (m <= 2) {
    std::fill(cd.begin(), cd.end(), std::numeric_limits<double>::infinity());
    return cd;
  }
  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < n_obj; ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return objs[front[a]][k] < objs[front[b]][k];
    });
    const double lo = objs[front[order.front()]][k];
    const double hi = objs[front[order.back()]][k];
    cd[order.front()] = std::numeric_limits<double>::infinity();
    cd[order.back()] = std::numeric_limits<double>::infinity();
    if (hi == lo) continue;
    for (std::size_t p = 1; p + 1 < m; ++p) {
      const double gap = objs[front[order[p + 1]]][k] - objs[front[order[p - 1]]][k];
      cd[order[p]] += gap / (hi - lo);
    }
  }
  return cd;
}

std::vector<std::size_t> crowded_order(const ParetoRanking& ranking) {
  std::vector<std::size_t> order(ranking.rank.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return crowded_less(ranking.rank[a], ranking.crowding[a], ranking.rank[b],
                        ranking.crowding[b]);
  });
  return order;
}

}  // namespace polydeme
