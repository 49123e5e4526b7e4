#include "polydeme/omopso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polydeme/pareto.hpp"
#include "polydeme/variation.hpp"

namespace polydeme {

bool EpsilonArchive::eps_dominates(const ObjectiveVector& a,
                                   const ObjectiveVector& b) const {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double shifted = a[k] - epsilon_[k];
    if (shifted > b[k]) return false;
    if (shifted < b[k]) strict = true;
  }
  return strict;
}

bool EpsilonArchive::try_add(const Individual& candidate) {
  const auto& c = candidate.objs();
  for (const auto& member : items_) {
    if (eps_dominates(member.objs(), c)) return false;
  }
  std::erase_if(items_, [&](const Individual& member) {
    return eps_dominates(c, member.objs());
  });
  items_.push_back(candidate);
  return true;
}

namespace {

std::vector<double> parse_epsilon(const Params& params, std::size_t n_obj) {
  std::vector<double> eps(n_obj, 0.0075);
  if (!params.contains("epsilon")) return eps;
  const auto& e = params.at("epsilon");
  if (e.is_array()) {
    if (e.size() != n_obj)
      throw config_error("epsilon list length must equal objective count");
    for (std::size_t k = 0; k < n_obj; ++k) eps[k] = e[k].get<double>();
  } else {
    std::fill(eps.begin(), eps.end(), e.get<double>());
  }
  return eps;
}

}  // namespace

Omopso::Omopso(Problem problem, const Params& params,
               std::shared_ptr<BudgetMeter> meter, std::uint64_t seed,
               std::optional<Population> initial)
    : Driver(std::move(meter), seed), problem_(std::move(problem)),
      eps_(parse_epsilon(params, problem_.objective_count)) {
  mutation_rate_ = params.value("mutation_rate",
                                1.0 / static_cast<double>(problem_.dimension));
  perturbation_ = params.value("mutation_perturbation", 0.5);
  mutation_scale_ = params.value("mutation_scale", 1.0);
  nonuniform_horizon_ = params.value("nonuniform_iterations", std::uint64_t{250});
  Population start;
  if (initial) {
    start = std::move(*initial);
    swarm_size_ = start.size();
  } else {
    swarm_size_ = params.value("swarm_size",
                               params.value("population_size", std::size_t{64}));
    start = random_population(problem_, swarm_size_, rng());
  }
  if (start.empty()) throw config_error("OMOPSO requires a nonempty swarm");
  swarm_.reserve(start.size());
  for (auto& ind : start) {
    OmopsoParticle p;
    p.velocity.assign(problem_.dimension, 0.0);
    p.current = std::move(ind);
    swarm_.push_back(std::move(p));
  }
}

void Omopso::rebuild_leaders(const Population& candidates) {
  Population pool = leaders_;
  std::vector<char> shield = shielded_;
  pool.insert(pool.end(), candidates.begin(), candidates.end());
  shield.resize(pool.size(), 0);

  // Dominance pruning applies to everyone; the shield only protects
  // immigrants from the crowding cut.
  const auto objs = objectives_of(pool);
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pool.size() && !dominated; ++j) {
      if (j != i && dominates(objs[j], objs[i])) dominated = true;
    }
    if (!dominated) alive.push_back(i);
  }
  if (alive.size() > swarm_size_) {
    std::vector<ObjectiveVector> alive_objs;
    alive_objs.reserve(alive.size());
    for (auto i : alive) alive_objs.push_back(objs[i]);
    std::vector<std::size_t> front(alive.size());
    std::iota(front.begin(), front.end(), std::size_t{0});
    const auto cd = crowding_of_front(alive_objs, front);
    std::vector<std::size_t> order(alive.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cd[a] > cd[b];
    });
    std::vector<std::size_t> kept;
    for (auto a : order) {
      if (shield[alive[a]]) kept.push_back(alive[a]);
    }
    for (auto a : order) {
      if (kept.size() >= swarm_size_) break;
      if (!shield[alive[a]]) kept.push_back(alive[a]);
    }
    alive = std::move(kept);
  }
  Population next;
  next.reserve(alive.size());
  for (auto i : alive) next.push_back(pool[i]);
  leaders_ = std::move(next);
  shielded_.assign(leaders_.size(), 0);
}

Population Omopso::do_step() {
  // Lazy initialization so the cost lands in the first step.
  bool fresh = false;
  for (auto& p : swarm_) {
    if (!p.current.evaluated()) {
      evaluate(problem_, p.current, meter());
      fresh = true;
    }
    if (!p.personal_best.evaluated()) p.personal_best = p.current;
  }
  if (fresh || leaders_.empty()) {
    Population currents;
    for (const auto& p : swarm_) currents.push_back(p.current);
    rebuild_leaders(currents);
    for (const auto& p : swarm_) eps_.try_add(p.current);
  }
  ++iteration_;

  std::vector<std::size_t> leader_front(leaders_.size());
  std::iota(leader_front.begin(), leader_front.end(), std::size_t{0});
  const auto leader_crowd =
      crowding_of_front(objectives_of(leaders_), leader_front);
  auto pick_leader = [&]() -> const Individual& {
    const std::size_t a = rng().index(leaders_.size());
    const std::size_t b = rng().index(leaders_.size());
    if (leader_crowd[a] > leader_crowd[b]) return leaders_[a];
    if (leader_crowd[b] > leader_crowd[a]) return leaders_[b];
    return rng().chance(0.5) ? leaders_[a] : leaders_[b];
  };

  const std::size_t n = swarm_.size();
  for (std::size_t t = 0; t < n; ++t) {
    auto& p = swarm_[t];
    const auto& leader = pick_leader();
    const double w = rng().uniform(0.1, 0.5);
    const double c1 = rng().uniform(1.5, 2.0);
    const double c2 = rng().uniform(1.5, 2.0);
    const double r1 = rng().uniform();
    const double r2 = rng().uniform();
    Genotype x = p.current.genotype;
    for (std::size_t i = 0; i < problem_.dimension; ++i) {
      p.velocity[i] = w * p.velocity[i] +
                      c1 * r1 * (p.personal_best.genotype[i] - x[i]) +
                      c2 * r2 * (leader.genotype[i] - x[i]);
      x[i] += p.velocity[i];
      const auto [lo, hi] = problem_.bounds[i];
      if (x[i] < lo) {
        x[i] = lo;
        p.velocity[i] = -p.velocity[i];
      } else if (x[i] > hi) {
        x[i] = hi;
        p.velocity[i] = -p.velocity[i];
      }
    }

    // Turbulence by thirds of the swarm.
    if (t < n / 3) {
      for (std::size_t i = 0; i < problem_.dimension; ++i) {
        if (!rng().chance(mutation_rate_)) continue;
        const auto [lo, hi] = problem_.bounds[i];
        x[i] += (rng().uniform() - 0.5) * perturbation_ * (hi - lo) *
                mutation_scale_;
        x[i] = std::clamp(x[i], lo, hi);
      }
    } else if (t < 2 * n / 3) {
      const double progress = std::min(
          1.0, static_cast<double>(iteration_) /
                   static_cast<double>(nonuniform_horizon_));
      for (std::size_t i = 0; i < problem_.dimension; ++i) {
        if (!rng().chance(mutation_rate_)) continue;
        const auto [lo, hi] = problem_.bounds[i];
        const double span = rng().chance(0.5) ? hi - x[i] : lo - x[i];
        const double u = rng().uniform();
        const double shrink =
            1.0 - std::pow(u, std::pow(1.0 - progress, nonuniform_b_));
        x[i] += span * shrink * mutation_scale_;
        x[i] = std::clamp(x[i], lo, hi);
      }
    }
    p.current = Individual(std::move(x));
  }

  Population currents;
  currents.reserve(n);
  for (auto& p : swarm_) {
    evaluate(problem_, p.current, meter());
    if (dominates(p.current.objs(), p.personal_best.objs())) {
      p.personal_best = p.current;
    } else if (!dominates(p.personal_best.objs(), p.current.objs()) &&
               rng().chance(0.5)) {
      p.personal_best = p.current;
    }
    currents.push_back(p.current);
  }
  rebuild_leaders(currents);
  for (const auto& c : currents) eps_.try_add(c);
  stepped_ = true;
  return leaders_;
}

std::vector<std::size_t> Omopso::ranking_order() const {
  std::vector<std::size_t> front(leaders_.size());
  std::iota(front.begin(), front.end(), std::size_t{0});
  const auto cd = crowding_of_front(objectives_of(leaders_), front);
  std::vector<std::size_t> order(leaders_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cd[a] > cd[b];
  });
  return order;
}

Population Omopso::finalize() {
  if (!stepped_) throw std::logic_error("finalize before first step");
  return eps_.items();
}

std::vector<Individual> Omopso::nominate_delegates(std::size_t count) {
  const auto order = ranking_order();
  std::vector<Individual> out;
  for (std::size_t k = 0; k < order.size() && k < count; ++k)
    out.push_back(leaders_[order[k]]);
  return out;
}

std::vector<Individual> Omopso::deport(std::size_t count) {
  if (count >= leaders_.size())
    throw std::invalid_argument("deport: count must be below population size");
  const auto order = ranking_order();
  std::vector<std::size_t> leaving(order.begin(), order.begin() + count);
  std::vector<Individual> out;
  out.reserve(count);
  for (auto i : leaving) out.push_back(leaders_[i]);
  std::sort(leaving.rbegin(), leaving.rend());
  for (auto i : leaving) {
    leaders_.erase(leaders_.begin() + static_cast<std::ptrdiff_t>(i));
    shielded_.erase(shielded_.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return out;
}

void Omopso::assimilate(std::vector<Individual> immigrants) {
  for (auto& ind : immigrants) {
    if (ind.genotype.size() != problem_.dimension)
      throw std::invalid_argument("assimilate: genotype dimension mismatch");
    leaders_.push_back(std::move(ind));
    shielded_.push_back(1);
  }
}

}  // namespace polydeme
