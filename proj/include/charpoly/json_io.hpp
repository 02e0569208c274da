#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "charpoly/fredholm.hpp"
#include "charpoly/haar.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/ratios.hpp"
#include "charpoly/symbol.hpp"

namespace charpoly {

using json = nlohmann::ordered_json;

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const json& j);
json to_json(const Rational& r);
json to_json(const std::vector<Rational>& values);

/// {"A": [...], "B": [...], "C": [...], "D": [...]}, or the shorthand
/// {"A": [...], "C": [...], "symmetric": true}. Missing lists are empty.
SymbolSpec spec_from_json(const json& j);
json to_json(const SymbolSpec& spec);

json to_json(const IdentityReport& r);
json to_json(const SwapTerm& t);
json to_json(const McEstimate& e);

/// A grid file is either an array of specs or {"specs": [...], "sizes": [...]}.
struct GridFile {
  std::vector<SymbolSpec> specs;
  std::vector<int> sizes;  ///< empty: use the identity's default sizes
};

GridFile load_grid(const std::string& path);

}  // namespace charpoly
