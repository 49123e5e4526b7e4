#include "polydeme/registry.hpp"

#include <map>
#include <mutex>

namespace polydeme {

namespace detail {
void register_builtins();
}

namespace {

std::map<std::string, ComponentInfo>& registry() {
  static std::map<std::string, ComponentInfo> r;
  return r;
}

void ensure_builtins() {
  static std::once_flag once;
  std::call_once(once, [] { detail::register_builtins(); });
}

}  // namespace

void register_component(const std::string& token, ComponentInfo info) {
  registry()[canonical_token(token)] = std::move(info);
}

bool is_registered(const std::string& token) {
  ensure_builtins();
  return registry().count(canonical_token(token)) > 0;
}

const ComponentInfo* find_component(const std::string& token) {
  ensure_builtins();
  const auto it = registry().find(canonical_token(token));
  return it == registry().end() ? nullptr : &it->second;
}

std::vector<std::string> registered_tokens() {
  ensure_builtins();
  std::vector<std::string> out;
  for (const auto& [token, info] : registry()) out.push_back(token);
  return out;
}

void validate_chain(const AlgorithmChain& chain) {
  if (chain.elements.empty()) throw config_error("empty algorithm chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& token = chain.elements[i];
    const auto* info = find_component(token);
    if (info == nullptr)
      throw config_error("unknown algorithm component '" + token + "'");
    const bool rightmost = i + 1 == chain.size();
    if (!rightmost && info->kind != ComponentKind::metamodel)
      throw config_error("component '" + token +
                         "' is not a meta-model and cannot wrap '" +
                         chain.elements[i + 1] + "'");
    if (rightmost && info->kind == ComponentKind::metamodel)
      throw config_error("meta-model '" + token +
                         "' requires an inner driver chain");
  }
}

std::unique_ptr<Driver> compose(const AlgorithmChain& chain,
                                const Problem& problem,
                                const RunConfig& config,
                                std::shared_ptr<BudgetMeter> meter,
                                std::uint64_t seed, const Params& overrides,
                                std::optional<Population> initial) {
  validate_chain(chain);
  const auto& token = chain.head();
  const auto* info = find_component(token);

  ComposeRequest req;
  req.chain = chain;
  req.problem = problem;
  req.config = &config;
  req.params = resolve_params(config, chain, 0);
  if (overrides.is_object()) req.params.update(overrides);
  req.forwarded = req.params;
  for (const auto& key : info->consumed_keys) req.forwarded.erase(key);
  req.meter = std::move(meter);
  req.seed = seed;
  req.initial = std::move(initial);
  return info->make(std::move(req));
}

}  // namespace polydeme
