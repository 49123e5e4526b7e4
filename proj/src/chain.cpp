#include "polydeme/chain.hpp"

#include <algorithm>
#include <cctype>

namespace polydeme {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string canonical_token(std::string_view raw) {
  std::string token = trim(raw);
  std::transform(token.begin(), token.end(), token.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  if (token == "NSGAI") token = "NSGAII";  // the literature's older spelling
  return token;
}

std::string normalize_section_key(std::string_view raw) {
  std::string stripped;
  stripped.reserve(raw.size());
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
  }
  std::string out;
  std::size_t start = 0;
  while (true) {
    const auto plus = stripped.find('+', start);
    const auto piece = stripped.substr(start, plus - start);
    if (!out.empty()) out.push_back('+');
    out += canonical_token(piece);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

AlgorithmChain AlgorithmChain::parse(std::string_view text) {
  AlgorithmChain chain;
  std::string s(text);
  std::size_t start = 0;
  while (true) {
    const auto plus = s.find('+', start);
    const auto token = canonical_token(
        std::string_view(s).substr(start, plus == std::string::npos
                                              ? std::string::npos
                                              : plus - start));
    if (token.empty())
      throw config_error("empty component name in chain '" + s + "'");
    chain.elements.push_back(token);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return chain;
}

std::string AlgorithmChain::str() const {
  std::string out;
  for (const auto& e : elements) {
    if (!out.empty()) out.push_back('+');
    out += e;
  }
  return out;
}

AlgorithmChain AlgorithmChain::suffix() const {
  AlgorithmChain out;
  out.elements.assign(elements.begin() + 1, elements.end());
  return out;
}

}  // namespace polydeme
