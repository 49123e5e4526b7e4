#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polydeme {

using Genotype = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Raised for bad tokens, malformed chains, unusable configuration.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One candidate solution: real-vector genotype plus objectives once
/// evaluated. Minimization convention throughout.
struct Individual {
  Genotype genotype;
  std::optional<ObjectiveVector> objectives;

  Individual() = default;
  explicit Individual(Genotype g) : genotype(std::move(g)) {}
  Individual(Genotype g, ObjectiveVector o)
      : genotype(std::move(g)), objectives(std::move(o)) {}

  bool evaluated() const noexcept { return objectives.has_value(); }

  const ObjectiveVector& objs() const {
    if (!objectives) throw std::invalid_argument("individual not evaluated");
    return *objectives;
  }

  bool operator==(const Individual&) const = default;
};

using Population = std::vector<Individual>;

struct Problem {
  std::string name;
  std::size_t dimension = 0;
  std::size_t objective_count = 0;
  std::vector<std::pair<double, double>> bounds;  // per-coordinate (lo, hi)
  std::function<ObjectiveVector(const Genotype&)> evaluator;
  // Generates `count` reference front points; absent when no front is known.
  std::function<std::vector<ObjectiveVector>(std::size_t)> reference_front;

  bool in_bounds(const Genotype& g) const;
  double domain_diagonal() const;
};

enum class BudgetMode { FitnessCalls, Steps };

/// Tracks the simulation resource budget. In FitnessCalls mode every
/// first-time evaluation consumes one unit; in Steps mode the runner
/// bills one unit per outermost step. Evaluations are always counted
/// separately so proxies can report step costs in either mode.
class BudgetMeter {
public:
  explicit BudgetMeter(std::uint64_t limit,
                       BudgetMode mode = BudgetMode::FitnessCalls)
      : limit_(limit), mode_(mode) {}

  void note_evaluation() {
    ++evaluations_;
    if (mode_ == BudgetMode::FitnessCalls) consumed_ = evaluations_;
  }

  void note_step() {
    ++steps_;
    if (mode_ == BudgetMode::Steps) consumed_ = steps_;
  }

  /// True once the limit has been reached; the step in flight still runs
  /// to completion and the overrun stays recorded in consumed().
  bool exhausted() const noexcept { return consumed_ >= limit_; }

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t consumed() const noexcept { return consumed_; }
  std::uint64_t evaluations() const noexcept { return evaluations_; }
  std::uint64_t steps() const noexcept { return steps_; }
  BudgetMode mode() const noexcept { return mode_; }

private:
  std::uint64_t limit_;
  std::uint64_t consumed_ = 0;
  std::uint64_t evaluations_ = 0;
  std::uint64_t steps_ = 0;
  BudgetMode mode_;
};

/// Pareto dominance, minimization: a dominates b iff a <= b componentwise
/// and a < b somewhere. Equal vectors never dominate each other.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Objective vectors of an evaluated population, in order.
std::vector<ObjectiveVector> objectives_of(const Population& pop);

/// Members not dominated by any other member, input order preserved.
/// Duplicates in objective space are all retained.
Population nondominated_filter(const Population& pop);
std::vector<ObjectiveVector> nondominated_filter(
    const std::vector<ObjectiveVector>& points);

/// Evaluates in place unless already evaluated (never re-billed).
/// Out-of-bounds genotypes are a domain error.
Individual& evaluate(const Problem& problem, Individual& ind,
                     BudgetMeter& meter);

/// Evaluates every unevaluated member.
void evaluate_all(const Problem& problem, Population& pop, BudgetMeter& meter);

Genotype clip_to_bounds(const Problem& problem, Genotype g);

}  // namespace polydeme
