#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hermitian/family.hpp"
#include "hermitian/rational.hpp"

namespace hermitian {

enum class LengthClass { Long, Short };

/// A positive root written in the simple-root basis, [n1, n2, ...].
struct Root {
  std::vector<int> coeffs;
  LengthClass length = LengthClass::Long;
  bool compact = true;

  int height() const;
  bool operator==(const Root& other) const { return coeffs == other.coeffs; }
};

/// "[1,1,2,2,1,1,1]"
std::string to_string(const Root& root);

/// An element of h* in fundamental-weight coordinates: x = sum fw[i] * omega_i.
struct Weight {
  std::vector<Rational> fw;

  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : fw(std::move(coords)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank, Rational(0))); }

  std::size_t size() const { return fw.size(); }
  const Rational& operator[](std::size_t i) const { return fw[i]; }
  Rational& operator[](std::size_t i) { return fw[i]; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& s);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w) { return w *= s; }
  bool operator==(const Weight&) const = default;
};

/// lambda = lambda0 + z * zeta with (lambda0 + rho, beta^vee) = 0.
struct Decomposition {
  Weight lambda0;
  Rational z;
};

/// Exact root data for one Hermitian family. Immutable after construction.
///
/// Cartan convention: cartan()[i][j] = <alpha_j, alpha_i^vee>. Simple roots
/// carry half-square-lengths d_i with d = 1 on long roots and d = 1/2 on the
/// short roots of types B and C, so (alpha_i, alpha_j) = d_i * cartan()[i][j].
class RootSystem {
 public:
  explicit RootSystem(HermitianType type);

  const HermitianType& type() const { return type_; }
  std::size_t rank() const { return cartan_.size(); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Rational>& half_lengths() const { return d_; }

  /// All positive roots, sorted by (height, coefficient vector).
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Positive noncompact roots in the same order.
  std::vector<Root> noncompact_roots() const;
  const Root& highest_root() const { return beta_; }
  /// 0-based index of the noncompact simple root.
  std::size_t noncompact_index() const { return nc_index_; }

  const Weight& rho() const { return rho_; }
  const Weight& zeta() const { return zeta_; }
  const Constants& constants() const { return constants_; }

  /// Half of (a, a) for a root given by simple-root coefficients.
  Rational half_length(std::span<const int> coeffs) const;

  /// (x, a^vee) = sum_j n_j (d_j / d_a) x_j.
  Rational pairing(const Weight& x, const Root& a) const;
  Rational pairing(const Weight& x, std::span<const int> coeffs) const;

  /// Throws DimensionMismatch unless the weight has rank() coordinates.
  Weight weight(std::vector<Rational> fw) const;

  Decomposition decompose(const Weight& lambda) const;
  Weight compose(const Weight& lambda0, const Rational& z) const;

  /// Classical families only (UnsupportedFamily otherwise). For su(p,q) the
  /// input may carry any trace; fw_to_eps returns the traceless vector.
  std::size_t eps_dimension() const;
  Weight eps_to_fw(std::span<const Rational> eps) const;
  std::vector<Rational> fw_to_eps(const Weight& w) const;
  /// Root expressed in epsilon coordinates (classical families only).
  std::vector<int> root_eps(const Root& root) const;
  /// "e3-e4", "2e1", "e1+e6"; empty string for exceptional families.
  std::string root_eps_label(const Root& root) const;

 private:
  void generate_roots();
  void validate() const;

  HermitianType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> d_;
  std::size_t nc_index_ = 0;
  std::vector<Root> positive_;
  Root beta_;
  Weight rho_;
  Weight zeta_;
  Constants constants_;
};

}  // namespace hermitian
