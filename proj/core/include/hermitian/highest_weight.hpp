#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hermitian/poset.hpp"
#include "hermitian/root_system.hpp"

namespace hermitian {

/// Residue class of z = (lambda + rho, beta^vee).
enum class IntegralityClass { Integral, HalfIntegral, Other };

enum class Verdict {
  Unitary,                 ///< k <= r-1 and z = z_k
  NotUnitary,              ///< k <= r-1 and z != z_k
  NotDeterminedByTheorem,  ///< associated variety is all of p+
};

std::string to_string(IntegralityClass cls);
std::string to_string(Verdict verdict);
IntegralityClass parse_integrality_class(std::string_view text);
Verdict parse_verdict(std::string_view text);

struct AnalysisReport {
  HermitianType type = HermitianType::e6();
  Weight lambda;
  Rational z;
  Weight lambda0;
  IntegralityClass cls = IntegralityClass::Other;
  std::vector<Root> diagram;
  int width = 0;   ///< m(lambda)
  int k = 0;       ///< associated-variety index
  std::int64_t gk_dim = 0;
  std::vector<Rational> thresholds;    ///< z_k(lambda0), k = 0..r-1
  std::vector<Rational> zk_constants;  ///< (rho, beta^vee) - k c, k = 0..r
  Verdict verdict = Verdict::NotDeterminedByTheorem;
  std::vector<std::string> caveats;

  bool operator==(const AnalysisReport&) const = default;
};

/// Highest-weight invariants for one Hermitian family. Holds the root data and
/// the poset of noncompact roots; every query is a pure function.
class HighestWeightAnalyzer {
 public:
  explicit HighestWeightAnalyzer(const HermitianType& type);

  const HermitianType& type() const { return roots_.type(); }
  const RootSystem& roots() const { return roots_; }
  const NoncompactPoset& poset() const { return poset_; }
  int real_rank() const { return roots_.constants().r; }

  /// Compact simple coordinates are nonnegative integers.
  bool is_dominant(const Weight& lambda) const;

  IntegralityClass classify(const Rational& z) const;

  /// Y_lambda: noncompact alpha with (lambda + rho, alpha^vee) in Z_{<= 0}.
  ElementSet diagram(const Weight& lambda) const;
  int width_of(const Weight& lambda) const;

  /// Associated-variety index from the width of Y_lambda.
  int k_of(const Weight& lambda) const;

  /// Smallest lattice point z with (lambda0 + z zeta + rho, alpha^vee) > 0
  /// for some alpha in A_k. The lattice is Z, except 1/2 + Z for odd k in
  /// the non-simply-laced families.
  Rational z_threshold(const Weight& lambda0, int k) const;
  std::vector<Rational> thresholds(const Weight& lambda0) const;

  /// (rho, beta^vee) - k c for 0 <= k <= r.
  Rational zk_constant(int k) const;

  /// Associated-variety index from the threshold chain.
  int k_from_thresholds(const Weight& lambda) const;

  /// k z_{k-1} with k from the threshold chain.
  std::int64_t gk_dim(const Weight& lambda) const;

  /// GK dimension along the unitary pattern, k = -(lambda, beta^vee) / c.
  /// Throws NotInUnitaryPattern when k lands on a non-integer in [0, r-1]
  /// or is negative.
  std::int64_t gk_dim_unitary(const Weight& lambda) const;

  /// Dimension of the orbit closure O_k, k z_{k-1} (0 for k = 0).
  std::int64_t orbit_dimension(int k) const;

  Verdict unitarity_verdict(const Weight& lambda) const;

  /// Full invariant bundle. Throws NotDominant unless `allow_non_dominant`,
  /// in which case a caveat is recorded instead.
  AnalysisReport analyze(const Weight& lambda, bool allow_non_dominant = false) const;

 private:
  RootSystem roots_;
  NoncompactPoset poset_;
};

}  // namespace hermitian
