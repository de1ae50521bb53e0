#include "hermitian/poset.hpp"

#include <algorithm>
#include <map>

#include "hermitian/error.hpp"

namespace hermitian {

namespace {

// Kuhn's augmenting-path matching on the strict-order bipartite graph.
class ChainCoverMatcher {
 public:
  explicit ChainCoverMatcher(std::vector<std::vector<std::size_t>> adjacency)
      : adj_(std::move(adjacency)), match_right_(adj_.size(), kNone) {}

  std::size_t run() {
    std::size_t matched = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      visited_.assign(adj_.size(), false);
      if (augment(u)) ++matched;
    }
    return matched;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      if (visited_[v]) continue;
      visited_[v] = true;
      if (match_right_[v] == kNone || augment(match_right_[v])) {
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> visited_;
};

}  // namespace

bool order_le(const Root& a, const Root& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw DimensionMismatch("roots of different rank");
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (b.coeffs[i] < a.coeffs[i]) return false;
  }
  return true;
}

NoncompactPoset::NoncompactPoset(const RootSystem& roots)
    : elements_(roots.noncompact_roots()),
      r_(roots.constants().r),
      step_(static_cast<int>(ceil(roots.constants().c))),
      simply_laced_(roots.type().simply_laced()) {
  const std::size_t n = elements_.size();
  le_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) le_[a][b] = order_le(elements_[a], elements_[b]);
  }

  up_.assign(n, {});
  down_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!le_[a][b]) continue;
      bool cover = true;
      for (std::size_t c = a + 1; c < b && cover; ++c) cover = !(le_[a][c] && le_[c][b]);
      if (!cover) continue;
      hasse_.emplace_back(a, b);
      up_[a].push_back(b);
      down_[b].push_back(a);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (up_[i].size() > 2 || down_[i].size() > 2) {
      throw ConsistencyError("Hasse diagram node with more than two covers: " + to_string(elements_[i]));
    }
  }
}

std::size_t NoncompactPoset::index_of(const Root& root) const {
  auto it = std::find(elements_.begin(), elements_.end(), root);
  if (it == elements_.end()) throw OutOfRange(to_string(root) + " is not a noncompact positive root");
  return static_cast<std::size_t>(it - elements_.begin());
}

ElementSet NoncompactPoset::level(int h) const {
  if (h < 1 || h > max_height()) {
    throw OutOfRange("height " + std::to_string(h) + " outside [1, " + std::to_string(max_height()) + "]");
  }
  ElementSet out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].height() == h) out.push_back(i);
  }
  return out;
}

int NoncompactPoset::antichain_height(int k) const {
  if (k < 0 || k > r_ - 1) {
    throw OutOfRange("A_k needs 0 <= k <= " + std::to_string(r_ - 1) + ", got " + std::to_string(k));
  }
  return k * step_ + 1;
}

ElementSet NoncompactPoset::antichain(int k) const {
  auto out = level(antichain_height(k));
  const std::size_t expected = simply_laced_ ? static_cast<std::size_t>(k + 1) : static_cast<std::size_t>(k / 2 + 1);
  if (out.size() != expected) {
    throw ConsistencyError("|A_" + std::to_string(k) + "| = " + std::to_string(out.size()) + ", expected " +
                           std::to_string(expected));
  }
  return out;
}

std::size_t NoncompactPoset::width(std::span<const std::size_t> subset) const {
  const std::size_t n = subset.size();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le_[subset[i]][subset[j]]) adjacency[i].push_back(j);
    }
  }
  return n - ChainCoverMatcher(std::move(adjacency)).run();
}

std::size_t NoncompactPoset::width() const {
  ElementSet all(size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return width(all);
}

bool NoncompactPoset::is_lower_ideal(std::span<const std::size_t> subset) const {
  std::vector<bool> member(size(), false);
  for (auto i : subset) member.at(i) = true;
  for (auto b : subset) {
    for (auto a : down_[b]) {
      if (!member[a]) return false;
    }
  }
  return true;
}

bool NoncompactPoset::is_antichain(std::span<const std::size_t> subset) const {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (comparable(subset[i], subset[j])) return false;
    }
  }
  return true;
}

std::size_t NoncompactPoset::width_by_levels(std::span<const std::size_t> subset) const {
  if (!is_lower_ideal(subset)) throw NotLowerIdeal("width_by_levels needs a lower order ideal");
  std::map<int, std::size_t> per_level;
  std::size_t best = 0;
  for (auto i : subset) best = std::max(best, ++per_level[height(i)]);
  return best;
}

ElementSet NoncompactPoset::down_closure(std::span<const std::size_t> generators) const {
  std::vector<bool> member(size(), false);
  for (auto g : generators) {
    for (std::size_t a = 0; a < size(); ++a) {
      if (le_[a].at(g)) member[a] = true;
    }
  }
  ElementSet out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (member[i]) out.push_back(i);
  }
  return out;
}

}  // namespace hermitian
