#include "hermitian/highest_weight.hpp"

#include <algorithm>

#include "hermitian/error.hpp"

namespace hermitian {

std::string to_string(IntegralityClass cls) {
  switch (cls) {
    case IntegralityClass::Integral:
      return "integral";
    case IntegralityClass::HalfIntegral:
      return "half_integral";
    case IntegralityClass::Other:
      return "other";
  }
  return {};
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Unitary:
      return "unitary";
    case Verdict::NotUnitary:
      return "not_unitary";
    case Verdict::NotDeterminedByTheorem:
      return "not_determined_by_theorem";
  }
  return {};
}

IntegralityClass parse_integrality_class(std::string_view text) {
  if (text == "integral") return IntegralityClass::Integral;
  if (text == "half_integral") return IntegralityClass::HalfIntegral;
  if (text == "other") return IntegralityClass::Other;
  throw ParseError("unknown integrality class '" + std::string(text) + "'");
}

Verdict parse_verdict(std::string_view text) {
  if (text == "unitary") return Verdict::Unitary;
  if (text == "not_unitary") return Verdict::NotUnitary;
  if (text == "not_determined_by_theorem") return Verdict::NotDeterminedByTheorem;
  throw ParseError("unknown verdict '" + std::string(text) + "'");
}

HighestWeightAnalyzer::HighestWeightAnalyzer(const HermitianType& type) : roots_(type), poset_(roots_) {}

bool HighestWeightAnalyzer::is_dominant(const Weight& lambda) const {
  if (lambda.size() != roots_.rank()) throw DimensionMismatch("weight has wrong rank");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i == roots_.noncompact_index()) continue;
    if (!is_integer(lambda[i]) || lambda[i] < 0) return false;
  }
  return true;
}

IntegralityClass HighestWeightAnalyzer::classify(const Rational& z) const {
  if (is_integer(z)) return IntegralityClass::Integral;
  if (!type().simply_laced() && is_half_odd(z)) return IntegralityClass::HalfIntegral;
  return IntegralityClass::Other;
}

ElementSet HighestWeightAnalyzer::diagram(const Weight& lambda) const {
  const Weight shifted = lambda + roots_.rho();
  ElementSet out;
  for (std::size_t i = 0; i < poset_.size(); ++i) {
    const Rational p = roots_.pairing(shifted, poset_.element(i));
    if (is_integer(p) && p <= 0) out.push_back(i);
  }
  return out;
}

int HighestWeightAnalyzer::width_of(const Weight& lambda) const {
  return static_cast<int>(poset_.width(diagram(lambda)));
}

int HighestWeightAnalyzer::k_of(const Weight& lambda) const {
  const int r = real_rank();
  const auto [lambda0, z] = roots_.decompose(lambda);
  const auto cls = classify(z);
  if (cls == IntegralityClass::Other) return r;

  const auto y = diagram(lambda);
  const int m = static_cast<int>(poset_.width(y));
  if (cls == IntegralityClass::Integral && !poset_.is_lower_ideal(y)) {
    throw ConsistencyError("Y_lambda is not a lower ideal for integral lambda");
  }
  if (type().simply_laced()) {
    if (m > r) throw ConsistencyError("width exceeds the real rank");
    return m;
  }
  const int k = cls == IntegralityClass::Integral ? 2 * m : 2 * m + 1;
  if (k <= r) return k;
  // Capped cases: m = (r+1)/2 (integral) or m = r/2 (half-integral).
  if (k != r + 1) throw ConsistencyError("width too large for the real rank");
  return r;
}

Rational HighestWeightAnalyzer::z_threshold(const Weight& lambda0, int k) const {
  const auto antichain = poset_.antichain(k);  // range-checks k
  const bool half_lattice = !type().simply_laced() && k % 2 == 1;
  const Weight shifted = lambda0 + roots_.rho();

  bool have = false;
  Rational best;
  for (auto i : antichain) {
    const auto& alpha = poset_.element(i);
    const Rational slope = roots_.pairing(roots_.zeta(), alpha);
    if (slope <= 0) throw ConsistencyError("(zeta, alpha^vee) must be positive on p+");
    // Need slope * z > -(lambda0 + rho, alpha^vee).
    const Rational bound = -roots_.pairing(shifted, alpha) / slope;
    const Rational candidate = half_lattice ? Rational(floor(bound - Rational(1, 2)) + 1) + Rational(1, 2)
                                            : Rational(floor(bound) + 1);
    if (!have || candidate < best) {
      best = candidate;
      have = true;
    }
  }
  return best;
}

std::vector<Rational> HighestWeightAnalyzer::thresholds(const Weight& lambda0) const {
  std::vector<Rational> out;
  for (int k = 0; k < real_rank(); ++k) out.push_back(z_threshold(lambda0, k));
  return out;
}

Rational HighestWeightAnalyzer::zk_constant(int k) const {
  const auto& c = roots_.constants();
  if (k < 0 || k > c.r) throw OutOfRange("z_k needs 0 <= k <= " + std::to_string(c.r));
  return Rational(c.rho_beta) - Rational(k) * c.c;
}

int HighestWeightAnalyzer::k_from_thresholds(const Weight& lambda) const {
  const int r = real_rank();
  const auto [lambda0, z] = roots_.decompose(lambda);
  const auto cls = classify(z);
  if (cls == IntegralityClass::Other) return r;

  int first = 0;
  int stride = 1;
  if (!type().simply_laced()) {
    first = cls == IntegralityClass::Integral ? 0 : 1;
    stride = 2;
  }
  for (int k = first; k <= r - 1; k += stride) {
    if (z_threshold(lambda0, k) <= z) return k;
  }
  return r;
}

std::int64_t HighestWeightAnalyzer::orbit_dimension(int k) const {
  if (k == 0) return 0;
  const Rational dim = Rational(k) * zk_constant(k - 1);
  if (!is_integer(dim) || dim < 0) throw ConsistencyError("orbit dimension is not a nonnegative integer");
  return dim.numerator();
}

std::int64_t HighestWeightAnalyzer::gk_dim(const Weight& lambda) const {
  return orbit_dimension(k_from_thresholds(lambda));
}

std::int64_t HighestWeightAnalyzer::gk_dim_unitary(const Weight& lambda) const {
  const int r = real_rank();
  const Rational lambda_beta = roots_.pairing(lambda, roots_.highest_root());
  const Rational k = -lambda_beta / roots_.constants().c;
  if (k > r - 1) return orbit_dimension(r);
  if (k < 0 || !is_integer(k)) {
    throw NotInUnitaryPattern("-(lambda, beta^vee)/c = " + to_string(k) + " is not an integer in [0, r-1]");
  }
  return orbit_dimension(static_cast<int>(k.numerator()));
}

Verdict HighestWeightAnalyzer::unitarity_verdict(const Weight& lambda) const {
  const int k = k_of(lambda);
  if (k >= real_rank()) return Verdict::NotDeterminedByTheorem;
  const Rational z = roots_.decompose(lambda).z;
  return z == zk_constant(k) ? Verdict::Unitary : Verdict::NotUnitary;
}

AnalysisReport HighestWeightAnalyzer::analyze(const Weight& lambda, bool allow_non_dominant) const {
  if (lambda.size() != roots_.rank()) {
    throw DimensionMismatch("expected " + std::to_string(roots_.rank()) + " coordinates for " + type().key());
  }
  const bool dominant = is_dominant(lambda);
  if (!dominant && !allow_non_dominant) {
    throw NotDominant("lambda is not dominant integral for the compact roots of " + type().key());
  }

  AnalysisReport report;
  report.type = type();
  report.lambda = lambda;
  const auto [lambda0, z] = roots_.decompose(lambda);
  report.lambda0 = lambda0;
  report.z = z;
  report.cls = classify(z);

  const auto y = diagram(lambda);
  for (auto i : y) report.diagram.push_back(poset_.element(i));
  report.width = static_cast<int>(poset_.width(y));
  report.thresholds = thresholds(lambda0);
  for (int k = 0; k <= real_rank(); ++k) report.zk_constants.push_back(zk_constant(k));

  if (!dominant) report.caveats.push_back("lambda is not dominant integral for the compact roots");

  int k_width = real_rank();
  try {
    k_width = k_of(lambda);
  } catch (const ConsistencyError& e) {
    if (dominant) throw;
    report.caveats.push_back(std::string("width route failed: ") + e.what());
  }
  const int k_chain = k_from_thresholds(lambda);
  if (k_width != k_chain) {
    if (dominant) {
      throw ConsistencyError("width route gives k = " + std::to_string(k_width) + " but thresholds give k = " +
                             std::to_string(k_chain));
    }
    report.caveats.push_back("width and threshold routes disagree");
  }
  report.k = k_width;
  report.gk_dim = orbit_dimension(report.k);
  if (dominant && report.gk_dim != gk_dim(lambda)) throw ConsistencyError("GK dimension routes disagree");

  if (report.k >= real_rank()) {
    report.verdict = Verdict::NotDeterminedByTheorem;
  } else {
    report.verdict = z == zk_constant(report.k) ? Verdict::Unitary : Verdict::NotUnitary;
  }

  if (report.cls == IntegralityClass::Other) {
    report.caveats.push_back("z is off the reduction-point lattice; k = r by the residue rule");
  } else {
    report.caveats.push_back("assumes lambda is a reduction point");
  }
  return report;
}

}  // namespace hermitian
