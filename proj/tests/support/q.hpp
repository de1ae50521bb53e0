#pragma once

#include "hermitian/rational.hpp"

namespace hermitian::testing {

// Rational literal. Comparing Rational against a bare int inside gtest macros
// goes through boost's recursive mixed operator, so tests always compare
// Rational with Rational.
inline Rational Q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

}  // namespace hermitian::testing
