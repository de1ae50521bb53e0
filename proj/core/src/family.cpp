#include "hermitian/family.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hermitian/error.hpp"

namespace hermitian {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams(what);
}

std::vector<int> parse_args(std::string_view args, std::string_view whole) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= args.size()) {
    const auto comma = args.find(',', start);
    auto item = args.substr(start, comma == std::string_view::npos ? args.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad family parameter in '" + std::string(whole) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

HermitianType HermitianType::su(int p, int q) {
  require(p >= 1 && q >= 1, "su(p,q) needs p,q >= 1");
  return {Family::SU, {p, q}};
}

HermitianType HermitianType::sp(int n) {
  require(n >= 1, "sp(n,R) needs n >= 1");
  return {Family::Sp, {n}};
}

HermitianType HermitianType::so_star(int n) {
  require(n >= 3, "so*(2n) needs n >= 3");
  return {Family::SOStar, {n}};
}

HermitianType HermitianType::so_odd(int n) {
  require(n >= 2, "so(2,2n-1) needs n >= 2");
  return {Family::SOOdd, {n}};
}

HermitianType HermitianType::so_even(int n) {
  require(n >= 3, "so(2,2n-2) needs n >= 3");
  return {Family::SOEven, {n}};
}

HermitianType HermitianType::e6() { return {Family::E6, {}}; }
HermitianType HermitianType::e7() { return {Family::E7, {}}; }

HermitianType HermitianType::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::tolower(ch)));
  }
  if (s == "e6" || s == "e6(-14)") return e6();
  if (s == "e7" || s == "e7(-25)") return e7();

  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') {
    throw ParseError("unknown family '" + std::string(text) + "'");
  }
  const auto name = s.substr(0, open);
  const auto args = parse_args(std::string_view(s).substr(open + 1, s.size() - open - 2), text);

  auto arity = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("wrong number of parameters in '" + std::string(text) + "'");
  };
  if (name == "su") {
    arity(2);
    return su(args[0], args[1]);
  }
  arity(1);
  if (name == "sp") return sp(args[0]);
  if (name == "so*" || name == "sostar") {
    if (args[0] % 2 != 0) throw ParseError("so*(m) needs an even m in '" + std::string(text) + "'");
    return so_star(args[0] / 2);
  }
  if (name == "so_odd") return so_odd(args[0]);
  if (name == "so_even") return so_even(args[0]);
  throw ParseError("unknown family '" + std::string(text) + "'");
}

int HermitianType::rank() const {
  switch (family_) {
    case Family::SU:
      return params_[0] + params_[1] - 1;
    case Family::Sp:
    case Family::SOStar:
    case Family::SOOdd:
    case Family::SOEven:
      return params_[0];
    case Family::E6:
      return 6;
    case Family::E7:
      return 7;
  }
  return 0;
}

std::string HermitianType::key() const {
  switch (family_) {
    case Family::SU:
      return "su(" + std::to_string(params_[0]) + "," + std::to_string(params_[1]) + ")";
    case Family::Sp:
      return "sp(" + std::to_string(params_[0]) + ")";
    case Family::SOStar:
      return "so*(" + std::to_string(2 * params_[0]) + ")";
    case Family::SOOdd:
      return "so_odd(" + std::to_string(params_[0]) + ")";
    case Family::SOEven:
      return "so_even(" + std::to_string(params_[0]) + ")";
    case Family::E6:
      return "e6";
    case Family::E7:
      return "e7";
  }
  return {};
}

std::string HermitianType::display_name() const {
  switch (family_) {
    case Family::SU:
      return key();
    case Family::Sp:
      return "sp(" + std::to_string(params_[0]) + ",R)";
    case Family::SOStar:
      return "so*(" + std::to_string(2 * params_[0]) + ")";
    case Family::SOOdd:
      return "so(2," + std::to_string(2 * params_[0] - 1) + ")";
    case Family::SOEven:
      return "so(2," + std::to_string(2 * params_[0] - 2) + ")";
    case Family::E6:
      return "e6(-14)";
    case Family::E7:
      return "e7(-25)";
  }
  return {};
}

Constants constants(const HermitianType& type) {
  const auto& a = type.params();
  switch (type.family()) {
    case Family::SU: {
      const int n = a[0] + a[1];
      return {std::min(a[0], a[1]), Rational(1), n - 1};
    }
    case Family::Sp:
      return {a[0], Rational(1, 2), a[0]};
    case Family::SOStar:
      return {a[0] / 2, Rational(2), 2 * a[0] - 3};
    case Family::SOOdd:
      return {2, Rational(2 * a[0] - 3, 2), 2 * a[0] - 2};
    case Family::SOEven:
      return {2, Rational(a[0] - 2), 2 * a[0] - 3};
    case Family::E6:
      return {2, Rational(3), 11};
    case Family::E7:
      return {3, Rational(4), 17};
  }
  return {};
}

}  // namespace hermitian
