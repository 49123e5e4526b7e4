#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "polydeme/chain.hpp"

namespace polydeme {

using Params = nlohmann::json;

/// Parameter sections keyed by component token or chain string, as read
/// from a configuration file. Section keys are normalized (whitespace
/// stripped, tokens canonicalized), so "HGS + NSGAI" and "HGS+NSGAII"
/// address the same section.
///
/// The reserved top-level key "output_format" ("binary" or "json")
/// selects the chunk encoding and is not treated as a section.
class RunConfig {
public:
  RunConfig() = default;

  static RunConfig from_json(const nlohmann::json& doc);
  static RunConfig load(const std::filesystem::path& file);

  /// Section for a normalized key, or nullptr.
  const Params* section(const std::string& normalized_key) const;

  void set_section(const std::string& key, Params params);

  const std::map<std::string, Params>& sections() const { return sections_; }

  const std::string& output_format() const { return output_format_; }
  void set_output_format(std::string f) { output_format_ = std::move(f); }

private:
  std::map<std::string, Params> sections_;
  std::string output_format_ = "binary";
};

/// Merged parameters for the chain component at `component_index`,
/// lowest to highest precedence: built-in defaults, then config sections
/// keyed by progressively longer chain prefixes starting at that
/// component ("HGS" then "HGS+NSGAII" for the HGS element of
/// "IMGA+HGS+NSGAII").
Params resolve_params(const RunConfig& config, const AlgorithmChain& chain,
                      std::size_t component_index);

}  // namespace polydeme
