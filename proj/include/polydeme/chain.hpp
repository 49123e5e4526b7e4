#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polydeme/core.hpp"

namespace polydeme {

/// Canonical component token: trimmed, upper-cased, alias-resolved
/// (NSGAI -> NSGAII).
std::string canonical_token(std::string_view raw);

/// Strips all whitespace and canonicalizes every token of a section key,
/// so the config keys "HGS + NSGAI" and "HGS+NSGAII" coincide.
std::string normalize_section_key(std::string_view raw);

/// Parsed composition string. Leftmost element is the outermost
/// meta-model, rightmost is the base driver.
struct AlgorithmChain {
  std::vector<std::string> elements;

  /// Grammar: NAME ("+" NAME)*, names case-insensitive, surrounding
  /// whitespace stripped.
  static AlgorithmChain parse(std::string_view text);

  std::string str() const;
  std::size_t size() const noexcept { return elements.size(); }
  const std::string& head() const { return elements.front(); }

  /// Chain with the first element removed (the inner composition).
  AlgorithmChain suffix() const;

  bool operator==(const AlgorithmChain&) const = default;
};

}  // namespace polydeme
