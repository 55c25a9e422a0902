#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dgspec/formats.hpp"
#include "dgspec/graph.hpp"
#include "dgspec/spectra.hpp"
#include "dgspec/theorems.hpp"

namespace dgspec::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Rounds to 12 significant digits, folds |x| < 1e-12 (and -0) to 0 and maps
// non-finite values to the strings "inf", "-inf" and "nan".
Json number(double x);
Json numbers(const Spectrum& s);
Json numbers(const std::vector<double>& xs);

Json to_json(const TheoremReport& r);
Json to_json(const FamilySpec& s);
Json describe_input(const std::string& role, const std::string& source, const std::string& format, const Graph& g);

// Sorted keys, two-space indent, trailing newline.
std::string serialize(const Json& report);

}  // namespace dgspec::cli
