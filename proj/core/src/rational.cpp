#include "hermitian/rational.hpp"

#include <cctype>
#include <charconv>

#include "hermitian/error.hpp"

namespace hermitian {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_display(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  if (q.denominator() == 2) {
    const auto whole = floor(q);
    if (whole == -1) return "-0.5";
    return std::to_string(whole >= 0 ? whole : whole + 1) + ".5";
  }
  return to_string(q);
}

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw ParseError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(trim(s.substr(0, slash)), text);
    const auto den = parse_int(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (frac_part.empty() || frac_part.size() > 15) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const auto whole = int_part.empty() ? 0 : parse_int(int_part, text);
    if (frac_part.front() == '-' || frac_part.front() == '+') {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    const auto frac = parse_int(frac_part, text);
    Rational value = Rational(whole) + Rational(frac, scale);
    return negative ? -value : value;
  }

  return Rational(parse_int(s, text));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hermitian
