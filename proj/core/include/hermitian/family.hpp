#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hermitian/rational.hpp"

namespace hermitian {

/// The seven families of Hermitian symmetric real forms.
enum class Family {
  SU,      ///< su(p,q), Dynkin type A_{p+q-1}
  Sp,      ///< sp(n,R), type C_n
  SOStar,  ///< so*(2n), type D_n
  SOOdd,   ///< so(2,2n-1), type B_n
  SOEven,  ///< so(2,2n-2), type D_n
  E6,      ///< e6(-14)
  E7,      ///< e7(-25)
};

/// Real-rank, the constant c and (rho, beta^vee) for a family.
struct Constants {
  int r = 0;
  Rational c;
  int rho_beta = 0;

  bool operator==(const Constants&) const = default;
};

/// A family together with its integer parameters. Always valid once
/// constructed; the factories throw InvalidParams otherwise.
class HermitianType {
 public:
  static HermitianType su(int p, int q);
  static HermitianType sp(int n);
  static HermitianType so_star(int n);
  static HermitianType so_odd(int n);
  static HermitianType so_even(int n);
  static HermitianType e6();
  static HermitianType e7();

  /// Accepts "su(4,3)", "sp(6)", "so*(10)", "so_odd(5)", "so_even(8)", "e6",
  /// "e7". "so*(m)" names the algebra so*(m) (m = 2n even); so_odd(n) is
  /// so(2,2n-1) and so_even(n) is so(2,2n-2).
  static HermitianType parse(std::string_view text);

  Family family() const { return family_; }
  const std::vector<int>& params() const { return params_; }

  /// Rank of the complex Lie algebra (number of simple roots).
  int rank() const;
  bool simply_laced() const { return family_ != Family::Sp && family_ != Family::SOOdd; }
  bool exceptional() const { return family_ == Family::E6 || family_ == Family::E7; }

  /// Canonical spelling accepted by parse(), e.g. "so_odd(5)".
  std::string key() const;
  /// Conventional name, e.g. "so(2,9)" or "sp(6,R)".
  std::string display_name() const;

  bool operator==(const HermitianType&) const = default;

 private:
  HermitianType(Family family, std::vector<int> params) : family_(family), params_(std::move(params)) {}

  Family family_;
  std::vector<int> params_;
};

/// Closed-form Table constants for the family.
Constants constants(const HermitianType& type);

}  // namespace hermitian
