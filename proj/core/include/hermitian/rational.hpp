#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace hermitian {

/// Exact rational used throughout the library. Quantities in this domain have
/// small numerators and denominators, so 64-bit components are plenty.
using Rational = boost::rational<std::int64_t>;

// boost::rational's mixed comparison recurses forever under C++20 rewritten
// operators; these exact matches take precedence.
inline bool operator==(const Rational& a, int b) { return a == Rational(b); }
inline bool operator==(const Rational& a, std::int64_t b) { return a == Rational(b); }
inline bool operator==(int a, const Rational& b) { return Rational(a) == b; }
inline bool operator==(std::int64_t a, const Rational& b) { return Rational(a) == b; }

/// Largest integer not exceeding `q`.
inline std::int64_t floor(const Rational& q) {
  const auto n = q.numerator();
  const auto d = q.denominator();  // always positive
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

inline std::int64_t ceil(const Rational& q) { return -floor(-q); }

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// True iff q lies in 1/2 + Z.
inline bool is_half_odd(const Rational& q) { return q.denominator() == 2; }

/// "7/2", "-3", "0".
std::string to_string(const Rational& q);

/// Human-friendly decimal for half-integers ("3.5"); falls back to a/b.
std::string to_display(const Rational& q);

/// Parses "a/b", "-3", "3.5", "-0.25". Decimals are converted exactly.
/// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals; whitespace around items is ignored.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace hermitian
