#pragma once

// Brute-force reference implementations. Test builds only.

#include <stdexcept>
#include <vector>

#include "hermitian/hermitian.hpp"

namespace hermitian::oracle {

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maximum antichain size by exhaustive branch and bound. Throws TooLarge
/// above 64 elements.
int brute_width(const NoncompactPoset& poset, const ElementSet& subset);

/// The A_k sets written out per family, as simple-root coefficient vectors.
std::vector<std::vector<int>> closed_form_antichain(const HermitianType& type, int k);

/// (r, c, (rho, beta^vee)) as tabulated for each family.
Constants table_row(const HermitianType& type);

/// Lattice for the k-th threshold: Z, or 1/2 + Z for odd k in types B and C.
bool half_lattice(const HermitianType& type, int k);

/// Scans the lattice upward from a value where no alpha in the closed-form
/// A_k can pair positively, and returns the first z where one does.
Rational brute_threshold(const RootSystem& roots, const Weight& lambda0, int k);

/// 2(x, a) / (a, a) computed in epsilon coordinates with the standard form.
Rational eps_pairing(const RootSystem& roots, const Weight& x, const Root& a);

/// True iff eps_pairing agrees with RootSystem::pairing.
bool eps_pairing_check(const RootSystem& roots, const Weight& x, const Root& a);

}  // namespace hermitian::oracle
