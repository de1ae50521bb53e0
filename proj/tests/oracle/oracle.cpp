#include "oracle.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace hermitian::oracle {

namespace {

void search(const std::vector<std::uint64_t>& comparable, std::uint64_t candidates, int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  const int v = std::countr_zero(candidates);
  const std::uint64_t bit = std::uint64_t{1} << v;
  search(comparable, candidates & ~bit & ~comparable[v], size + 1, best);
  search(comparable, candidates & ~bit, size, best);
}

// Concatenated blocks of repeated values, e.g. {{0, 2}, {1, 3}} -> 0,0,1,1,1.
std::vector<int> blocks(std::initializer_list<std::pair<int, int>> parts) {
  std::vector<int> out;
  for (auto [value, count] : parts) {
    if (count < 0) throw std::logic_error("negative block length");
    out.insert(out.end(), static_cast<std::size_t>(count), value);
  }
  return out;
}

void require_k(const HermitianType& type, int k) {
  if (k < 0 || k >= table_row(type).r) throw std::out_of_range("k outside [0, r-1] for " + type.key());
}

// Simple roots and fundamental weights in the standard epsilon realizations.
struct EpsModel {
  std::vector<std::vector<Rational>> simple;
  std::vector<std::vector<Rational>> omega;
};

EpsModel eps_model(const HermitianType& type) {
  const int l = type.rank();
  const int n = type.family() == Family::SU ? l + 1 : l;
  auto unit = [&](int i) {
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto diff = [&](int i, int j, int sj) {
    auto v = unit(i);
    v[static_cast<std::size_t>(j)] += Rational(sj);
    return v;
  };
  auto prefix = [&](int len, Rational value) {
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = value;
    return v;
  };

  EpsModel m;
  for (int i = 0; i + 1 < n; ++i) m.simple.push_back(diff(i, i + 1, -1));
  for (int i = 1; i <= l; ++i) m.omega.push_back(prefix(i, Rational(1)));
  switch (type.family()) {
    case Family::SU:
      break;
    case Family::Sp: {
      auto last = unit(n - 1);
      last[static_cast<std::size_t>(n - 1)] = 2;
      m.simple.push_back(last);
      break;
    }
    case Family::SOOdd:
      m.simple.push_back(unit(n - 1));
      m.omega[static_cast<std::size_t>(n - 1)] = prefix(n, Rational(1, 2));
      break;
    case Family::SOStar:
    case Family::SOEven: {
      m.simple.push_back(diff(n - 2, n - 1, 1));
      auto spin_minus = prefix(n, Rational(1, 2));
      spin_minus[static_cast<std::size_t>(n - 1)] = Rational(-1, 2);
      m.omega[static_cast<std::size_t>(n - 2)] = spin_minus;
      m.omega[static_cast<std::size_t>(n - 1)] = prefix(n, Rational(1, 2));
      break;
    }
    case Family::E6:
    case Family::E7:
      throw UnsupportedFamily("no epsilon model for " + type.key());
  }
  return m;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

int brute_width(const NoncompactPoset& poset, const ElementSet& subset) {
  if (subset.size() > 64) throw TooLarge("brute_width handles at most 64 elements");
  std::vector<std::uint64_t> comparable(subset.size(), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (i == j) continue;
      const Root& a = poset.element(subset[i]);
      const Root& b = poset.element(subset[j]);
      bool le = true;
      bool ge = true;
      for (std::size_t t = 0; t < a.coeffs.size(); ++t) {
        le = le && a.coeffs[t] <= b.coeffs[t];
        ge = ge && a.coeffs[t] >= b.coeffs[t];
      }
      if (le || ge) comparable[i] |= std::uint64_t{1} << j;
    }
  }
  const std::uint64_t all = subset.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << subset.size()) - 1;
  int best = 0;
  search(comparable, all, 0, best);
  return best;
}

Constants table_row(const HermitianType& type) {
  const auto& p = type.params();
  switch (type.family()) {
    case Family::SU:
      return {std::min(p[0], p[1]), Rational(1), p[0] + p[1] - 1};
    case Family::Sp:
      return {p[0], Rational(1, 2), p[0]};
    case Family::SOStar:
      return {p[0] / 2, Rational(2), 2 * p[0] - 3};
    case Family::SOOdd:
      return {2, Rational(p[0]) - Rational(3, 2), 2 * p[0] - 2};
    case Family::SOEven:
      return {2, Rational(p[0] - 2), 2 * p[0] - 3};
    case Family::E6:
      return {2, Rational(3), 11};
    case Family::E7:
      return {3, Rational(4), 17};
  }
  throw std::logic_error("unknown family");
}

bool half_lattice(const HermitianType& type, int k) {
  return (type.family() == Family::Sp || type.family() == Family::SOOdd) && k % 2 == 1;
}

std::vector<std::vector<int>> closed_form_antichain(const HermitianType& type, int k) {
  require_k(type, k);
  const auto& prm = type.params();
  std::vector<std::vector<int>> out;
  switch (type.family()) {
    case Family::SU: {
      const int p = prm[0];
      const int q = prm[1];
      for (int i = 0; i <= k; ++i) out.push_back(blocks({{0, p - k + i - 1}, {1, k + 1}, {0, q - i - 1}}));
      break;
    }
    case Family::Sp: {
      const int n = prm[0];
      const int m = k / 2;
      for (int i = 0; i <= m; ++i) {
        if (k % 2 == 0) {
          out.push_back(blocks({{0, n - m - 1 - i}, {1, 2 * i}, {2, m - i}, {1, 1}}));
        } else {
          out.push_back(blocks({{0, n - m - 2 - i}, {1, 1 + 2 * i}, {2, m - i}, {1, 1}}));
        }
      }
      break;
    }
    case Family::SOStar: {
      const int n = prm[0];
      if (k == 0) {
        out.push_back(blocks({{0, n - 1}, {1, 1}}));
        break;
      }
      out.push_back(blocks({{0, n - 2 * k - 2}, {1, 2 * k}, {0, 1}, {1, 1}}));
      for (int i = 0; i <= k - 1; ++i) {
        out.push_back(blocks({{0, n - 2 * k - 1 + i}, {1, 2 * k - 2 * i - 1}, {2, i}, {1, 2}}));
      }
      break;
    }
    case Family::SOOdd: {
      const int n = prm[0];
      out.push_back(k == 0 ? blocks({{1, 1}, {0, n - 1}}) : blocks({{1, n}}));
      break;
    }
    case Family::SOEven: {
      const int n = prm[0];
      if (k == 0) {
        out.push_back(blocks({{1, 1}, {0, n - 1}}));
      } else {
        out.push_back(blocks({{1, n - 1}, {0, 1}}));
        out.push_back(blocks({{1, n - 2}, {0, 1}, {1, 1}}));
      }
      break;
    }
    case Family::E6:
      if (k == 0) {
        out = {{1, 0, 0, 0, 0, 0}};
      } else {
        out = {{1, 0, 1, 1, 1, 0}, {1, 1, 1, 1, 0, 0}};
      }
      break;
    case Family::E7:
      if (k == 0) {
        out = {{0, 0, 0, 0, 0, 0, 1}};
      } else if (k == 1) {
        out = {{0, 0, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 1, 1, 1}};
      } else {
        out = {{1, 1, 2, 2, 1, 1, 1}, {1, 1, 1, 2, 2, 1, 1}, {0, 1, 1, 2, 2, 2, 1}};
      }
      break;
  }
  return out;
}

Rational brute_threshold(const RootSystem& roots, const Weight& lambda0, int k) {
  const auto& type = roots.type();
  const auto antichain = closed_form_antichain(type, k);
  const Weight shifted = lambda0 + roots.rho();
  std::int64_t bound = 1;
  for (const auto& a : antichain) bound += std::abs(floor(roots.pairing(shifted, a))) + 1;

  auto holds = [&](const Rational& z) {
    const Weight lambda = roots.compose(lambda0, z) + roots.rho();
    for (const auto& a : antichain) {
      if (roots.pairing(lambda, a) > 0) return true;
    }
    return false;
  };

  Rational z(-bound);
  if (half_lattice(type, k)) z += Rational(1, 2);
  if (holds(z)) throw std::logic_error("brute_threshold start is not below the threshold");
  while (!holds(z)) z += 1;
  return z;
}

Rational eps_pairing(const RootSystem& roots, const Weight& x, const Root& a) {
  const auto model = eps_model(roots.type());
  const std::size_t n = model.simple.front().size();
  std::vector<Rational> xe(n, Rational(0));
  std::vector<Rational> ae(n, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t t = 0; t < n; ++t) xe[t] += x[i] * model.omega[i][t];
  }
  for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
    for (std::size_t t = 0; t < n; ++t) ae[t] += Rational(a.coeffs[j]) * model.simple[j][t];
  }
  return 2 * dot(xe, ae) / dot(ae, ae);
}

bool eps_pairing_check(const RootSystem& roots, const Weight& x, const Root& a) {
  return eps_pairing(roots, x, a) == roots.pairing(x, a);
}

}  // namespace hermitian::oracle
