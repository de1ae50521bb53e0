#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hermitian/highest_weight.hpp"

namespace hermitian {

enum class Basis { Fw, Eps };

struct Coordinates {
  Basis basis = Basis::Fw;
  std::vector<Rational> values;
};

/// "fw:0,0,1/2", "eps:0,0,0,-20,8,6,6"; a bare list means fundamental weights.
Coordinates parse_coordinates(std::string_view text);

/// A highest weight as a user writes it down. When `z` is set the
/// coordinates describe lambda0 and lambda = lambda0 + z * zeta.
struct WeightSpec {
  std::string family;
  Coordinates coords;
  std::optional<Rational> z;

  /// JSON record: {"family": ..., and exactly one of "fw": [...], "eps": [...],
  /// or "lambda0": {"fw"|"eps": [...]} together with "z"}. Rationals may be
  /// integers, decimals ("3.5" or 3.5), "a/b" strings, or {"num","den"}.
  static WeightSpec from_json(const nlohmann::json& record);
  nlohmann::json to_json() const;

  Weight resolve(const RootSystem& roots) const;
};

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& value);

/// Stable machine-readable form of an AnalysisReport.
nlohmann::json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& doc);

std::string report_text(const AnalysisReport& report, const RootSystem& roots);

nlohmann::json info_json(const HighestWeightAnalyzer& hw);
std::string info_text(const HighestWeightAnalyzer& hw);

nlohmann::json antichains_json(const HighestWeightAnalyzer& hw);
std::string antichains_text(const HighestWeightAnalyzer& hw);

nlohmann::json thresholds_json(const HighestWeightAnalyzer& hw, const Weight& lambda0);
std::string thresholds_text(const HighestWeightAnalyzer& hw, const Weight& lambda0);

/// Graphviz digraph of the Hasse diagram of the noncompact roots, ranked by
/// height. Elements of `highlight` get a filled style.
std::string hasse_dot(const HighestWeightAnalyzer& hw, const ElementSet& highlight = {});

}  // namespace hermitian
