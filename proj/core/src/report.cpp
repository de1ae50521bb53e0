#include "hermitian/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hermitian/error.hpp"

namespace hermitian {

using nlohmann::json;

namespace {

std::string join(const std::vector<Rational>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += to_string(values[i]);
  }
  return s + ")";
}

json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& q : values) out.push_back(rational_to_json(q));
  return out;
}

std::vector<Rational> rationals_from_json(const json& value, std::string_view what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& item : value) out.push_back(rational_from_json(item));
  return out;
}

std::string root_label(const RootSystem& roots, const Root& root) {
  auto eps = roots.root_eps_label(root);
  return eps.empty() ? to_string(root) : to_string(root) + " " + eps;
}

const json& require_key(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Coordinates parse_coordinates(std::string_view text) {
  Coordinates out;
  if (text.starts_with("eps:")) {
    out.basis = Basis::Eps;
    text.remove_prefix(4);
  } else if (text.starts_with("fw:")) {
    text.remove_prefix(3);
  }
  out.values = parse_rational_list(text);
  return out;
}

json rational_to_json(const Rational& q) { return json{{"num", q.numerator()}, {"den", q.denominator()}}; }

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) return parse_rational(value.dump());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_object() && value.contains("num") && value.contains("den")) {
    const auto& num = value["num"];
    const auto& den = value["den"];
    if (!num.is_number_integer() || !den.is_number_integer() || den.get<std::int64_t>() == 0) {
      throw ParseError("bad rational object " + value.dump());
    }
    return Rational(num.get<std::int64_t>(), den.get<std::int64_t>());
  }
  throw ParseError("cannot read a rational from " + value.dump());
}

WeightSpec WeightSpec::from_json(const json& record) {
  if (!record.is_object()) throw ParseError("weight record must be a JSON object");
  const auto& family = require_key(record, "family");
  if (!family.is_string()) throw ParseError("'family' must be a string");

  WeightSpec spec;
  spec.family = family.get<std::string>();
  const int forms = static_cast<int>(record.contains("fw")) + static_cast<int>(record.contains("eps")) +
                    static_cast<int>(record.contains("lambda0"));
  if (forms != 1) throw ParseError("exactly one of 'fw', 'eps', 'lambda0' is required");

  if (record.contains("lambda0")) {
    const auto& inner = record["lambda0"];
    if (!inner.is_object() || inner.contains("fw") == inner.contains("eps")) {
      throw ParseError("'lambda0' needs exactly one of 'fw' or 'eps'");
    }
    spec.coords.basis = inner.contains("eps") ? Basis::Eps : Basis::Fw;
    spec.coords.values = rationals_from_json(inner.contains("eps") ? inner["eps"] : inner["fw"], "lambda0");
    spec.z = rational_from_json(require_key(record, "z"));
    return spec;
  }
  if (record.contains("z")) throw ParseError("'z' is only meaningful together with 'lambda0'");
  spec.coords.basis = record.contains("eps") ? Basis::Eps : Basis::Fw;
  spec.coords.values = rationals_from_json(record.contains("eps") ? record["eps"] : record["fw"], "coordinates");
  return spec;
}

json WeightSpec::to_json() const {
  const char* key = coords.basis == Basis::Eps ? "eps" : "fw";
  json out{{"family", family}};
  if (z) {
    out["lambda0"] = json{{key, rationals_to_json(coords.values)}};
    out["z"] = rational_to_json(*z);
  } else {
    out[key] = rationals_to_json(coords.values);
  }
  return out;
}

Weight WeightSpec::resolve(const RootSystem& roots) const {
  Weight w = coords.basis == Basis::Eps ? roots.eps_to_fw(coords.values) : roots.weight(coords.values);
  return z ? roots.compose(w, *z) : w;
}

json report_to_json(const AnalysisReport& report) {
  json diagram = json::array();
  for (const auto& root : report.diagram) diagram.push_back(root.coeffs);
  return json{
      {"family", report.type.key()},
      {"lambda_fw", rationals_to_json(report.lambda.fw)},
      {"z", rational_to_json(report.z)},
      {"lambda0_fw", rationals_to_json(report.lambda0.fw)},
      {"class", to_string(report.cls)},
      {"diagram_roots", diagram},
      {"width", report.width},
      {"k", report.k},
      {"gk_dim", report.gk_dim},
      {"thresholds", rationals_to_json(report.thresholds)},
      {"zk_constants", rationals_to_json(report.zk_constants)},
      {"verdict", to_string(report.verdict)},
      {"caveats", report.caveats},
  };
}

AnalysisReport report_from_json(const json& doc) {
  try {
    AnalysisReport report;
    report.type = HermitianType::parse(require_key(doc, "family").get<std::string>());
    const RootSystem roots(report.type);
    report.lambda = roots.weight(rationals_from_json(require_key(doc, "lambda_fw"), "lambda_fw"));
    report.z = rational_from_json(require_key(doc, "z"));
    report.lambda0 = roots.weight(rationals_from_json(require_key(doc, "lambda0_fw"), "lambda0_fw"));
    report.cls = parse_integrality_class(require_key(doc, "class").get<std::string>());
    for (const auto& coeffs : require_key(doc, "diagram_roots")) {
      const auto wanted = coeffs.get<std::vector<int>>();
      const auto& all = roots.positive_roots();
      auto it = std::find_if(all.begin(), all.end(), [&](const Root& r) { return r.coeffs == wanted; });
      if (it == all.end()) throw ParseError("unknown root in diagram_roots: " + coeffs.dump());
      report.diagram.push_back(*it);
    }
    report.width = require_key(doc, "width").get<int>();
    report.k = require_key(doc, "k").get<int>();
    report.gk_dim = require_key(doc, "gk_dim").get<std::int64_t>();
    report.thresholds = rationals_from_json(require_key(doc, "thresholds"), "thresholds");
    report.zk_constants = rationals_from_json(require_key(doc, "zk_constants"), "zk_constants");
    report.verdict = parse_verdict(require_key(doc, "verdict").get<std::string>());
    report.caveats = require_key(doc, "caveats").get<std::vector<std::string>>();
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report document: ") + e.what());
  }
}

std::string report_text(const AnalysisReport& report, const RootSystem& roots) {
  std::ostringstream os;
  os << "family:        " << report.type.display_name() << "\n";
  os << "lambda (fw):   " << join(report.lambda.fw) << "\n";
  if (!report.type.exceptional()) os << "lambda (eps):  " << join(roots.fw_to_eps(report.lambda)) << "\n";
  os << "z:             " << to_display(report.z) << "\n";
  os << "lambda0 (fw):  " << join(report.lambda0.fw) << "\n";
  os << "class:         " << to_string(report.cls) << "\n";
  os << "Y_lambda:      " << report.diagram.size() << " roots\n";
  for (const auto& root : report.diagram) os << "  " << root_label(roots, root) << "\n";
  os << "width m:       " << report.width << "\n";
  os << "AV index k:    " << report.k << "\n";
  os << "GKdim:         " << report.gk_dim << "\n";
  os << "z_k(lambda0):  ";
  for (std::size_t k = 0; k < report.thresholds.size(); ++k) {
    os << (k ? ", " : "") << "z_" << k << "=" << to_display(report.thresholds[k]);
  }
  os << "\nz_k constants: ";
  for (std::size_t k = 0; k < report.zk_constants.size(); ++k) {
    os << (k ? ", " : "") << "z_" << k << "=" << to_display(report.zk_constants[k]);
  }
  os << "\nverdict:       " << to_string(report.verdict) << "\n";
  for (const auto& caveat : report.caveats) os << "note:          " << caveat << "\n";
  return os.str();
}

json info_json(const HighestWeightAnalyzer& hw) {
  const auto& roots = hw.roots();
  const auto& c = roots.constants();
  return json{
      {"family", roots.type().key()},
      {"name", roots.type().display_name()},
      {"rank", roots.rank()},
      {"r", c.r},
      {"c", rational_to_json(c.c)},
      {"rho_beta", c.rho_beta},
      {"dim_p_plus", hw.poset().size()},
      {"height_beta", roots.highest_root().height()},
      {"noncompact_simple_index", roots.noncompact_index() + 1},
      {"beta", roots.highest_root().coeffs},
      {"simply_laced", roots.type().simply_laced()},
  };
}

std::string info_text(const HighestWeightAnalyzer& hw) {
  const auto& roots = hw.roots();
  const auto& c = roots.constants();
  std::ostringstream os;
  os << "family:                  " << roots.type().display_name() << " (" << roots.type().key() << ")\n";
  os << "rank:                    " << roots.rank() << "\n";
  os << "real rank r:             " << c.r << "\n";
  os << "c:                       " << to_display(c.c) << "\n";
  os << "(rho, beta^vee):         " << c.rho_beta << "\n";
  os << "|Delta(p+)|:             " << hw.poset().size() << "\n";
  os << "ht(beta):                " << roots.highest_root().height() << "\n";
  os << "noncompact simple root:  alpha_" << roots.noncompact_index() + 1 << "\n";
  os << "highest root beta:       " << root_label(roots, roots.highest_root()) << "\n";
  os << "simply laced:            " << (roots.type().simply_laced() ? "yes" : "no") << "\n";
  return os.str();
}

json antichains_json(const HighestWeightAnalyzer& hw) {
  const auto& poset = hw.poset();
  json sets = json::array();
  for (int k = 0; k < hw.real_rank(); ++k) {
    json roots = json::array();
    for (auto i : poset.antichain(k)) {
      json entry{{"coeffs", poset.element(i).coeffs}};
      if (!hw.type().exceptional()) entry["eps"] = hw.roots().root_eps_label(poset.element(i));
      roots.push_back(entry);
    }
    sets.push_back(json{{"k", k}, {"height", poset.antichain_height(k)}, {"roots", roots}});
  }
  return json{{"family", hw.type().key()}, {"antichains", sets}};
}

std::string antichains_text(const HighestWeightAnalyzer& hw) {
  const auto& poset = hw.poset();
  std::ostringstream os;
  os << hw.type().display_name() << ": r = " << hw.real_rank() << "\n";
  for (int k = 0; k < hw.real_rank(); ++k) {
    os << "A_" << k << " (height " << poset.antichain_height(k) << "):";
    for (auto i : poset.antichain(k)) os << "  " << root_label(hw.roots(), poset.element(i));
    os << "\n";
  }
  return os.str();
}

json thresholds_json(const HighestWeightAnalyzer& hw, const Weight& lambda0) {
  std::vector<Rational> constants;
  for (int k = 0; k <= hw.real_rank(); ++k) constants.push_back(hw.zk_constant(k));
  return json{
      {"family", hw.type().key()},
      {"lambda0_fw", rationals_to_json(lambda0.fw)},
      {"thresholds", rationals_to_json(hw.thresholds(lambda0))},
      {"zk_constants", rationals_to_json(constants)},
  };
}

std::string thresholds_text(const HighestWeightAnalyzer& hw, const Weight& lambda0) {
  std::ostringstream os;
  os << hw.type().display_name() << ", lambda0 (fw) = " << join(lambda0.fw) << "\n";
  os << "k    z_k(lambda0)    z_k\n";
  const auto values = hw.thresholds(lambda0);
  for (int k = 0; k < hw.real_rank(); ++k) {
    std::string t = to_display(values[k]);
    t.resize(std::max<std::size_t>(t.size(), 16), ' ');
    os << k << (k < 10 ? "    " : "   ") << t << to_display(hw.zk_constant(k)) << "\n";
  }
  return os.str();
}

std::string hasse_dot(const HighestWeightAnalyzer& hw, const ElementSet& highlight) {
  const auto& poset = hw.poset();
  std::vector<bool> marked(poset.size(), false);
  for (auto i : highlight) marked.at(i) = true;

  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  label=\"" << hw.type().display_name() << "\";\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& root = poset.element(i);
    std::string label = to_string(root);
    const auto eps = hw.roots().root_eps_label(root);
    if (!eps.empty()) label += "\\n" + eps;
    os << "  n" << i << " [label=\"" << label << "\"";
    if (marked[i]) os << ", style=filled, fillcolor=\"#f4a582\"";
    os << "];\n";
  }
  for (int h = 1; h <= poset.max_height(); ++h) {
    os << "  { rank=same;";
    for (auto i : poset.level(h)) os << " n" << i << ";";
    os << " }\n";
  }
  for (auto [a, b] : poset.hasse_edges()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hermitian
