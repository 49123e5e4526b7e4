#pragma once

#include <optional>

#include "polydeme/config.hpp"
#include "polydeme/driver.hpp"

namespace polydeme {

/// Additive epsilon-dominance archive: a candidate is rejected when some
/// member epsilon-dominates it; admission evicts every member the
/// candidate epsilon-dominates. With epsilon = 0 this degenerates to a
/// plain nondominated archive (duplicates retained).
class EpsilonArchive {
public:
  explicit EpsilonArchive(std::vector<double> epsilon)
      : epsilon_(std::move(epsilon)) {}

  bool try_add(const Individual& candidate);
  const Population& items() const noexcept { return items_; }

  /// a eps-dominates b iff a_k - eps_k <= b_k for all k, strictly for one.
  bool eps_dominates(const ObjectiveVector& a, const ObjectiveVector& b) const;

private:
  std::vector<double> epsilon_;
  Population items_;
};

struct OmopsoParticle {
  Individual current;
  Genotype velocity;
  Individual personal_best;
};

/// OMOPSO: particle swarm with a crowding-pruned leaders archive, an
/// epsilon-dominance result archive, and turbulence applied by thirds of
/// the swarm (uniform mutation / non-uniform mutation / none). The
/// leaders archive is the driver population; the epsilon archive is the
/// result exposed at finalize.
///
/// Parameters: swarm_size (alias population_size) 64, epsilon 0.0075
/// (scalar or per-objective list), mutation_rate 1/dimension,
/// mutation_perturbation 0.5, nonuniform_iterations 250 (horizon of the
/// non-uniform turbulence schedule), mutation_scale 1.
class Omopso : public Driver {
public:
  Omopso(Problem problem, const Params& params,
         std::shared_ptr<BudgetMeter> meter, std::uint64_t seed,
         std::optional<Population> initial = {});

  Population finalize() override;
  std::vector<Individual> nominate_delegates(std::size_t count) override;
  std::vector<Individual> deport(std::size_t count) override;
  void assimilate(std::vector<Individual> immigrants) override;

  const Population& leaders() const noexcept { return leaders_; }
  const Population& epsilon_archive() const noexcept { return eps_.items(); }
  const std::vector<OmopsoParticle>& swarm() const noexcept { return swarm_; }

protected:
  Population do_step() override;

private:
  void rebuild_leaders(const Population& candidates);
  std::vector<std::size_t> ranking_order() const;

  Problem problem_;
  std::size_t swarm_size_;
  double mutation_rate_;
  double perturbation_;
  double mutation_scale_;
  double nonuniform_b_ = 5.0;
  std::uint64_t nonuniform_horizon_;
  std::vector<OmopsoParticle> swarm_;
  Population leaders_;
  std::vector<char> shielded_;  // parallel to leaders_
  EpsilonArchive eps_;
  std::uint64_t iteration_ = 0;
  bool stepped_ = false;
};

}  // namespace polydeme
