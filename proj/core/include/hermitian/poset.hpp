#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hermitian/root_system.hpp"

namespace hermitian {

/// Indices into NoncompactPoset::elements(), kept sorted and unique.
using ElementSet = std::vector<std::size_t>;

/// alpha <= gamma iff gamma - alpha has nonnegative simple-root coefficients.
bool order_le(const Root& a, const Root& b);

/// The positive noncompact roots under the root order.
///
/// Elements are sorted by (height, coefficient vector), so index order is a
/// linear extension and index 0 is the noncompact simple root.
class NoncompactPoset {
 public:
  explicit NoncompactPoset(const RootSystem& roots);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Root>& elements() const { return elements_; }
  const Root& element(std::size_t i) const { return elements_.at(i); }
  /// Throws OutOfRange when the root is not a noncompact positive root.
  std::size_t index_of(const Root& root) const;

  bool le(std::size_t a, std::size_t b) const { return le_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return le_[a][b] || le_[b][a]; }
  int height(std::size_t i) const { return elements_.at(i).height(); }
  int max_height() const { return elements_.back().height(); }

  /// Roots of height h, 1 <= h <= ht(beta); OutOfRange otherwise.
  ElementSet level(int h) const;

  /// The distinguished antichain A_k = level(k * ceil(c) + 1), 0 <= k <= r-1.
  ElementSet antichain(int k) const;
  /// Height of A_k.
  int antichain_height(int k) const;

  /// Maximum antichain size inside `subset` (Dilworth: |S| minus a maximum
  /// matching in the comparability bipartite graph).
  std::size_t width(std::span<const std::size_t> subset) const;
  std::size_t width() const;

  bool is_lower_ideal(std::span<const std::size_t> subset) const;
  bool is_antichain(std::span<const std::size_t> subset) const;
  /// max_h |S cap level(h)|; requires a lower ideal (NotLowerIdeal otherwise).
  std::size_t width_by_levels(std::span<const std::size_t> subset) const;

  /// Cover relations (lower, upper) in index order.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const { return hasse_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_.at(i); }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_.at(i); }

  /// Smallest lower ideal containing the given elements.
  ElementSet down_closure(std::span<const std::size_t> generators) const;

 private:
  std::vector<Root> elements_;
  std::vector<std::vector<bool>> le_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  int r_ = 0;
  int step_ = 1;  // ceil(c)
  bool simply_laced_ = true;
};

}  // namespace hermitian
