#include "hermitian/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "hermitian/error.hpp"

namespace hermitian {

namespace {

struct Dynkin {
  std::vector<Rational> d;
  std::vector<std::pair<int, int>> edges;  // 0-based
  std::size_t nc_index = 0;
};

std::vector<std::pair<int, int>> chain(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

std::vector<std::pair<int, int>> type_d(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 3, n - 1);
  return edges;
}

Dynkin dynkin(const HermitianType& type) {
  const int l = type.rank();
  const Rational one(1);
  const Rational half(1, 2);
  Dynkin out;
  out.d.assign(static_cast<std::size_t>(l), one);
  switch (type.family()) {
    case Family::SU:
      out.edges = chain(l);
      out.nc_index = static_cast<std::size_t>(type.params()[0] - 1);
      break;
    case Family::Sp:
      out.edges = chain(l);
      for (int i = 0; i + 1 < l; ++i) out.d[i] = half;
      out.nc_index = static_cast<std::size_t>(l - 1);
      break;
    case Family::SOStar:
      out.edges = type_d(l);
      out.nc_index = static_cast<std::size_t>(l - 1);
      break;
    case Family::SOOdd:
      out.edges = chain(l);
      out.d[l - 1] = half;
      out.nc_index = 0;
      break;
    case Family::SOEven:
      out.edges = type_d(l);
      out.nc_index = 0;
      break;
    case Family::E6:
      // Bourbaki labelling: 1-3-4-5-6 with 2 attached to 4.
      out.edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      out.nc_index = 0;
      break;
    case Family::E7:
      out.edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};
      out.nc_index = 6;
      break;
  }
  return out;
}

std::size_t positive_root_count(const HermitianType& type) {
  const auto l = static_cast<std::size_t>(type.rank());
  switch (type.family()) {
    case Family::SU:
      return (l + 1) * l / 2;
    case Family::Sp:
    case Family::SOOdd:
      return l * l;
    case Family::SOStar:
    case Family::SOEven:
      return l * (l - 1);
    case Family::E6:
      return 36;
    case Family::E7:
      return 63;
  }
  return 0;
}

bool root_less(const Root& a, const Root& b) {
  const int ha = a.height();
  const int hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs < b.coeffs;
}

}  // namespace

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

std::string to_string(const Root& root) {
  std::string s = "[";
  for (std::size_t i = 0; i < root.coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(root.coeffs[i]);
  }
  return s + "]";
}

Weight& Weight::operator+=(const Weight& other) {
  if (fw.size() != other.fw.size()) throw DimensionMismatch("weight sizes differ");
  for (std::size_t i = 0; i < fw.size(); ++i) fw[i] += other.fw[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (fw.size() != other.fw.size()) throw DimensionMismatch("weight sizes differ");
  for (std::size_t i = 0; i < fw.size(); ++i) fw[i] -= other.fw[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& x : fw) x *= s;
  return *this;
}

RootSystem::RootSystem(HermitianType type) : type_(std::move(type)), constants_(hermitian::constants(type_)) {
  auto diagram = dynkin(type_);
  d_ = std::move(diagram.d);
  nc_index_ = diagram.nc_index;

  const std::size_t l = d_.size();
  std::vector<std::vector<Rational>> gram(l, std::vector<Rational>(l, Rational(0)));
  for (std::size_t i = 0; i < l; ++i) gram[i][i] = 2 * d_[i];
  for (auto [i, j] : diagram.edges) {
    const Rational b = -std::max(d_[i], d_[j]);
    gram[i][j] = b;
    gram[j][i] = b;
  }
  cartan_.assign(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const Rational a = gram[i][j] / d_[i];
      if (!is_integer(a)) throw ConsistencyError("non-integral Cartan entry");
      cartan_[i][j] = static_cast<int>(a.numerator());
    }
  }

  generate_roots();

  rho_ = Weight(std::vector<Rational>(l, Rational(1)));
  zeta_ = Weight::zero(l);
  zeta_[nc_index_] = Rational(1);
  const Rational scale = pairing(zeta_, beta_);
  if (scale != 1) throw ConsistencyError("(omega_nc, beta^vee) != 1 for " + type_.key());

  validate();
}

void RootSystem::generate_roots() {
  const std::size_t l = d_.size();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> simple(l, 0);
    simple[i] = 1;
    known.insert(simple);
    layer.push_back(std::move(simple));
  }

  // Root-string closure: a + alpha_i is a root iff p - <a, alpha_i^vee> > 0,
  // where p is the length of the alpha_i string below a.
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& a : layer) {
      for (std::size_t i = 0; i < l; ++i) {
        int p = 0;
        auto down = a;
        while (true) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        int bracket = 0;
        for (std::size_t j = 0; j < l; ++j) bracket += cartan_[i][j] * a[j];
        if (p - bracket > 0) {
          auto up = a;
          ++up[i];
          if (!known.contains(up)) next.insert(std::move(up));
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }

  const Rational long_d = *std::max_element(d_.begin(), d_.end());
  positive_.clear();
  for (const auto& coeffs : known) {
    Root root;
    root.coeffs = coeffs;
    root.length = half_length(coeffs) == long_d ? LengthClass::Long : LengthClass::Short;
    const int nc = coeffs[nc_index_];
    if (nc > 1) throw ConsistencyError("noncompact coefficient exceeds 1 in " + to_string(root));
    root.compact = nc == 0;
    positive_.push_back(std::move(root));
  }
  std::sort(positive_.begin(), positive_.end(), root_less);
  beta_ = positive_.back();
  for (const auto& root : positive_) {
    for (std::size_t i = 0; i < l; ++i) {
      if (root.coeffs[i] > beta_.coeffs[i]) throw ConsistencyError("highest root is not unique");
    }
  }
}

void RootSystem::validate() const {
  if (positive_.size() != positive_root_count(type_)) {
    throw ConsistencyError("positive root count mismatch for " + type_.key());
  }
  if (beta_.compact) throw ConsistencyError("highest root is compact");
  for (std::size_t i = 0; i < rank(); ++i) {
    std::vector<int> simple(rank(), 0);
    simple[i] = 1;
    if (pairing(rho_, simple) != 1) throw ConsistencyError("(rho, alpha_i^vee) != 1");
    if (i != nc_index_ && pairing(zeta_, simple) != 0) throw ConsistencyError("zeta not orthogonal to k");
  }
  if (pairing(rho_, beta_) != constants_.rho_beta) {
    throw ConsistencyError("(rho, beta^vee) disagrees with the table for " + type_.key());
  }
}

std::vector<Root> RootSystem::noncompact_roots() const {
  std::vector<Root> out;
  std::copy_if(positive_.begin(), positive_.end(), std::back_inserter(out), [](const Root& r) { return !r.compact; });
  return out;
}

Rational RootSystem::half_length(std::span<const int> coeffs) const {
  if (coeffs.size() != rank()) throw DimensionMismatch("root has wrong rank");
  Rational sum(0);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (coeffs[j] == 0) continue;
      sum += Rational(coeffs[i] * coeffs[j]) * d_[i] * cartan_[i][j];
    }
  }
  return sum / 2;
}

Rational RootSystem::pairing(const Weight& x, const Root& a) const { return pairing(x, a.coeffs); }

Rational RootSystem::pairing(const Weight& x, std::span<const int> coeffs) const {
  if (x.size() != rank() || coeffs.size() != rank()) throw DimensionMismatch("pairing across ranks");
  Rational sum(0);
  for (std::size_t j = 0; j < rank(); ++j) {
    if (coeffs[j] != 0) sum += Rational(coeffs[j]) * d_[j] * x[j];
  }
  return sum / half_length(coeffs);
}

Weight RootSystem::weight(std::vector<Rational> fw) const {
  if (fw.size() != rank()) {
    throw DimensionMismatch("expected " + std::to_string(rank()) + " fundamental-weight coordinates for " +
                            type_.key() + ", got " + std::to_string(fw.size()));
  }
  return Weight(std::move(fw));
}

Decomposition RootSystem::decompose(const Weight& lambda) const {
  const Rational z = pairing(lambda + rho_, beta_);
  return {lambda - z * zeta_, z};
}

Weight RootSystem::compose(const Weight& lambda0, const Rational& z) const { return lambda0 + z * zeta_; }

std::size_t RootSystem::eps_dimension() const {
  if (type_.exceptional()) throw UnsupportedFamily("no epsilon coordinates for " + type_.key());
  return type_.family() == Family::SU ? rank() + 1 : rank();
}

Weight RootSystem::eps_to_fw(std::span<const Rational> eps) const {
  const std::size_t n = eps_dimension();
  if (eps.size() != n) {
    throw DimensionMismatch("expected " + std::to_string(n) + " epsilon coordinates for " + type_.key() + ", got " +
                            std::to_string(eps.size()));
  }
  const std::size_t l = rank();
  Weight w = Weight::zero(l);
  for (std::size_t i = 0; i + 1 < n; ++i) w[i] = eps[i] - eps[i + 1];
  switch (type_.family()) {
    case Family::Sp:
      w[l - 1] = eps[n - 1];
      break;
    case Family::SOOdd:
      w[l - 1] = 2 * eps[n - 1];
      break;
    case Family::SOStar:
    case Family::SOEven:
      w[l - 1] = eps[n - 2] + eps[n - 1];
      break;
    default:
      break;
  }
  return w;
}

std::vector<Rational> RootSystem::fw_to_eps(const Weight& w) const {
  const std::size_t n = eps_dimension();
  if (w.size() != rank()) throw DimensionMismatch("weight has wrong rank");
  std::vector<Rational> e(n, Rational(0));
  const std::size_t l = rank();
  std::size_t last = n - 1;  // coordinates below `last` follow from differences
  switch (type_.family()) {
    case Family::SU:
      e[n - 1] = 0;
      break;
    case Family::Sp:
      e[n - 1] = w[l - 1];
      break;
    case Family::SOOdd:
      e[n - 1] = w[l - 1] / 2;
      break;
    case Family::SOStar:
    case Family::SOEven:
      e[n - 1] = (w[l - 1] - w[l - 2]) / 2;
      e[n - 2] = (w[l - 1] + w[l - 2]) / 2;
      last = n - 2;
      break;
    default:
      break;
  }
  for (std::size_t i = last; i-- > 0;) e[i] = e[i + 1] + w[i];
  if (type_.family() == Family::SU) {
    Rational mean(0);
    for (const auto& x : e) mean += x;
    mean /= static_cast<std::int64_t>(n);
    for (auto& x : e) x -= mean;
  }
  return e;
}

std::vector<int> RootSystem::root_eps(const Root& root) const {
  const std::size_t n = eps_dimension();
  const std::size_t l = rank();
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i < l; ++i) {
    const int c = root.coeffs[i];
    if (c == 0) continue;
    const bool last = i == l - 1;
    if (!last || type_.family() == Family::SU) {
      e[i] += c;
      e[i + 1] -= c;
      continue;
    }
    switch (type_.family()) {
      case Family::Sp:
        e[n - 1] += 2 * c;
        break;
      case Family::SOOdd:
        e[n - 1] += c;
        break;
      default:  // type D
        e[n - 2] += c;
        e[n - 1] += c;
        break;
    }
  }
  return e;
}

std::string RootSystem::root_eps_label(const Root& root) const {
  if (type_.exceptional()) return {};
  const auto e = root_eps(root);
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int c = e[i];
    if (c == 0) continue;
    if (c < 0) {
      s += "-";
    } else if (!s.empty()) {
      s += "+";
    }
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += "e" + std::to_string(i + 1);
  }
  return s;
}

}  // namespace hermitian
