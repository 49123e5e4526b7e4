#include "polydeme/config.hpp"

#include <fstream>
#include <iostream>

#include "polydeme/registry.hpp"

namespace polydeme {

namespace {

// Tokens that are accepted in configuration files without a warning even
// though no implementation is registered for them.
bool known_unimplemented(const std::string& token) {
  return token == "JGBL" || token == "DHGS";
}

}  // namespace

RunConfig RunConfig::from_json(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw config_error("configuration root must be a JSON object");
  RunConfig out;
  for (const auto& [key, value] : doc.items()) {
    if (normalize_section_key(key) == "OUTPUT_FORMAT" ||
        key == "output_format") {
      const auto format = value.get<std::string>();
      if (format != "binary" && format != "json")
        throw config_error("output_format must be 'binary' or 'json', got '" +
                           format + "'");
      out.output_format_ = format;
      continue;
    }
    if (!value.is_object())
      throw config_error("configuration section '" + key +
                         "' must be a JSON object");
    const auto norm = normalize_section_key(key);
    if (out.sections_.count(norm))
      throw config_error("duplicate configuration section '" + key +
                         "' after normalization ('" + norm + "')");
    for (std::size_t start = 0, plus = 0; plus != std::string::npos;
         start = plus + 1) {
      plus = norm.find('+', start);
      const auto token = norm.substr(start, plus - start);
      if (!is_registered(token) && !known_unimplemented(token)) {
        std::cerr << "warning: configuration section '" << key
                  << "' names unknown component '" << token
                  << "'; section ignored unless such a component is "
                     "registered\n";
      }
    }
    out.sections_.emplace(norm, value);
  }
  return out;
}

RunConfig RunConfig::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw config_error("cannot open config file " + file.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw config_error("malformed config file " + file.string() + ": " +
                       e.what());
  }
  return from_json(doc);
}

const Params* RunConfig::section(const std::string& normalized_key) const {
  const auto it = sections_.find(normalized_key);
  return it == sections_.end() ? nullptr : &it->second;
}

void RunConfig::set_section(const std::string& key, Params params) {
  sections_[normalize_section_key(key)] = std::move(params);
}

Params resolve_params(const RunConfig& config, const AlgorithmChain& chain,
                      std::size_t component_index) {
  if (component_index >= chain.size())
    throw std::invalid_argument("resolve_params: component index out of range");
  Params out = Params::object();
  if (const auto* info = find_component(chain.elements[component_index]))
    out = info->defaults;
  // Progressively longer chain keys starting at this component; longer
  // (more specific) sections override shorter ones.
  std::string key;
  for (std::size_t j = component_index; j < chain.size(); ++j) {
    if (!key.empty()) key.push_back('+');
    key += chain.elements[j];
    if (const auto* sec = config.section(key)) out.update(*sec);
  }
  return out;
}

}  // namespace polydeme
