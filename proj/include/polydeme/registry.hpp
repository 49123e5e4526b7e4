#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polydeme/chain.hpp"
#include "polydeme/config.hpp"
#include "polydeme/driver.hpp"

namespace polydeme {

enum class ComponentKind { driver, metamodel };

/// Everything a component factory needs to build one instance. `chain`
/// starts at the component itself; meta-models compose chain.suffix()
/// recursively for their demes.
struct ComposeRequest {
  AlgorithmChain chain;
  Problem problem;
  const RunConfig* config = nullptr;
  Params params;     // resolved for this component, overrides applied
  Params forwarded;  // keys this component does not consume, passed inward
  std::shared_ptr<BudgetMeter> meter;
  std::uint64_t seed = 0;
  std::optional<Population> initial;  // meta-supplied initial population
};

struct ComponentInfo {
  ComponentKind kind;
  Params defaults;
  std::vector<std::string> consumed_keys;
  std::function<std::unique_ptr<Driver>(ComposeRequest)> make;
};

/// Registers a component under its canonical token. The registry is open:
/// new drivers and meta-models can be added at runtime.
void register_component(const std::string& token, ComponentInfo info);
bool is_registered(const std::string& token);
const ComponentInfo* find_component(const std::string& token);
std::vector<std::string> registered_tokens();

/// Structural validation: every non-rightmost element must be a
/// registered meta-model, the rightmost a registered component. Throws
/// config_error naming the offending token.
void validate_chain(const AlgorithmChain& chain);

/// Builds an initialized driver instance for the whole chain. A
/// meta-model head constructs its inner demes by recursive composition
/// of the chain suffix with deterministically derived seeds. `overrides`
/// take precedence over config resolution (this is how an outer
/// component sets the initial population size of its demes).
std::unique_ptr<Driver> compose(const AlgorithmChain& chain,
                                const Problem& problem,
                                const RunConfig& config,
                                std::shared_ptr<BudgetMeter> meter,
                                std::uint64_t seed,
                                const Params& overrides = Params::object(),
                                std::optional<Population> initial = {});

}  // namespace polydeme
