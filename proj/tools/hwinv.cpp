// hwinv: invariants of highest weight Harish-Chandra modules from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hermitian/hermitian.hpp"

namespace {

namespace hw = hermitian;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

struct WeightFlags {
  std::string fw;
  std::string eps;
  std::string lambda0;
  std::string z;

  void attach(CLI::App* cmd) {
    cmd->add_option("--fw", fw, "lambda in fundamental-weight coordinates, e.g. 0,0,1/2");
    cmd->add_option("--eps", eps, "lambda in epsilon coordinates (classical families)");
    cmd->add_option("--lambda0", lambda0, "lambda0 as fw:LIST or eps:LIST (bare LIST = fw); needs --z");
    cmd->add_option("--z", z, "z = (lambda + rho, beta^vee), used with --lambda0");
  }

  bool given() const { return !fw.empty() || !eps.empty() || !lambda0.empty(); }

  hw::WeightSpec spec(const std::string& family) const {
    const int forms = !fw.empty() + !eps.empty() + !lambda0.empty();
    if (forms != 1) throw hw::ParseError("give exactly one of --fw, --eps, --lambda0");
    hw::WeightSpec out;
    out.family = family;
    if (!lambda0.empty()) {
      if (z.empty()) throw hw::ParseError("--lambda0 needs --z");
      out.coords = hw::parse_coordinates(lambda0);
      out.z = hw::parse_rational(z);
    } else {
      if (!z.empty()) throw hw::ParseError("--z only combines with --lambda0");
      out.coords.basis = eps.empty() ? hw::Basis::Fw : hw::Basis::Eps;
      out.coords.values = hw::parse_rational_list(eps.empty() ? fw : eps);
    }
    return out;
  }
};

bool want_json(const std::string& format) { return format == "json"; }

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of highest weight Harish-Chandra modules for Hermitian symmetric pairs"};
  app.require_subcommand(1);

  std::string family;
  std::string format = "text";
  bool strict = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("family", family, "su(p,q), sp(n), so*(2n), so_odd(n), so_even(n), e6, e7")->required();
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* info = app.add_subcommand("info", "Table constants and poset size");
  add_common(info);

  WeightFlags analyze_flags;
  auto* analyze = app.add_subcommand("analyze", "Full invariant report for one highest weight");
  add_common(analyze);
  analyze_flags.attach(analyze);
  analyze->add_flag("--strict", strict, "treat a non-dominant weight as an error (exit 3)");

  auto* antichains = app.add_subcommand("antichains", "List the distinguished antichains A_k");
  add_common(antichains);

  std::string highlight;
  std::string highlight_z;
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the noncompact roots as Graphviz DOT");
  hasse->add_option("family", family, "family")->required();
  hasse->add_option("--highlight", highlight, "mark Y_lambda for this weight (fw:LIST or eps:LIST)");
  hasse->add_option("--z", highlight_z, "treat --highlight as lambda0 and add z*zeta");

  WeightFlags threshold_flags;
  auto* thresholds = app.add_subcommand("thresholds", "Table of z_k(lambda0)");
  add_common(thresholds);
  threshold_flags.attach(thresholds);

  std::string input_path;
  std::string output_path;
  unsigned threads = 0;
  auto* batch = app.add_subcommand("batch", "Analyze JSON-lines weight records");
  batch->add_option("input", input_path, "input file, one JSON record per line")->required();
  batch->add_option("output", output_path, "output file, one report per line")->required();
  batch->add_option("--threads", threads, "worker threads (0 = hardware)");
  batch->add_flag("--strict", strict, "report non-dominant weights as failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*batch) {
      std::ifstream in(input_path);
      if (!in) throw hw::ParseError("cannot open " + input_path);
      std::ofstream out(output_path);
      if (!out) throw hw::ParseError("cannot write " + output_path);
      const auto summary = hw::run_batch(in, out, {threads, strict});
      std::cerr << summary.records << " records, " << summary.failures << " failed\n";
      return kExitOk;
    }

    const hw::HighestWeightAnalyzer analyzer(hw::HermitianType::parse(family));

    if (*info) {
      if (want_json(format)) {
        emit(hw::info_json(analyzer));
      } else {
        std::cout << hw::info_text(analyzer);
      }
    } else if (*analyze) {
      if (!analyze_flags.given()) throw hw::ParseError("analyze needs --fw, --eps or --lambda0/--z");
      const auto lambda = analyze_flags.spec(family).resolve(analyzer.roots());
      if (!analyzer.is_dominant(lambda)) {
        if (strict) throw hw::NotDominant("lambda is not dominant integral for the compact roots");
        std::cerr << "warning: lambda is not dominant integral for the compact roots\n";
      }
      const auto report = analyzer.analyze(lambda, true);
      if (want_json(format)) {
        emit(hw::report_to_json(report));
      } else {
        std::cout << hw::report_text(report, analyzer.roots());
      }
    } else if (*antichains) {
      if (want_json(format)) {
        emit(hw::antichains_json(analyzer));
      } else {
        std::cout << hw::antichains_text(analyzer);
      }
    } else if (*hasse) {
      hw::ElementSet marked;
      if (!highlight.empty()) {
        hw::WeightSpec spec{family, hw::parse_coordinates(highlight), std::nullopt};
        if (!highlight_z.empty()) spec.z = hw::parse_rational(highlight_z);
        marked = analyzer.diagram(spec.resolve(analyzer.roots()));
      }
      std::cout << hw::hasse_dot(analyzer, marked);
    } else if (*thresholds) {
      if (!threshold_flags.given()) throw hw::ParseError("thresholds needs --lambda0, --fw or --eps");
      hw::Weight lambda0;
      if (!threshold_flags.lambda0.empty() && threshold_flags.z.empty()) {
        lambda0 = hw::WeightSpec{family, hw::parse_coordinates(threshold_flags.lambda0), std::nullopt}.resolve(
            analyzer.roots());
      } else {
        lambda0 = analyzer.roots().decompose(threshold_flags.spec(family).resolve(analyzer.roots())).lambda0;
      }
      if (want_json(format)) {
        emit(hw::thresholds_json(analyzer, lambda0));
      } else {
        std::cout << hw::thresholds_text(analyzer, lambda0);
      }
    }
    return kExitOk;
  } catch (const hw::NotDominant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const hw::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hw::InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hw::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hw::UnsupportedFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
