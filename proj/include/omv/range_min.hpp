#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace omv {

/// Sparse-table range minimum: O(n log n) build, O(1) query, leftmost
/// minimizing position on ties.
class RangeMinIndex {
 public:
  using Item = std::int64_t;

  RangeMinIndex() = default;
  explicit RangeMinIndex(std::span<const Item> values)
      : values_(values.begin(), values.end()) {
    const std::size_t n = values_.size();
    table_.emplace_back(n);
    for (std::size_t p = 0; p < n; ++p) table_[0][p] = p;
    for (std::size_t j = 1; (std::size_t{1} << j) <= n; ++j) {
      const std::size_t half = std::size_t{1} << (j - 1);
      std::vector<std::size_t> level(n - (std::size_t{1} << j) + 1);
      for (std::size_t p = 0; p < level.size(); ++p) {
        level[p] = better(table_[j - 1][p], table_[j - 1][p + half]);
      }
      table_.push_back(std::move(level));
    }
  }

  std::size_t size() const { return values_.size(); }

  /// (minimum, leftmost position) over the inclusive range [lo, hi].
  std::pair<Item, std::size_t> range_min(std::size_t lo, std::size_t hi) const {
    const std::size_t len = hi - lo + 1;
    const std::size_t j = static_cast<std::size_t>(std::bit_width(len)) - 1;
    const std::size_t p =
        better(table_[j][lo], table_[j][hi + 1 - (std::size_t{1} << j)]);
    return {values_[p], p};
  }

 private:
  std::size_t better(std::size_t a, std::size_t b) const {
    if (values_[b] < values_[a]) return b;
    if (values_[a] < values_[b]) return a;
    return std::min(a, b);
  }

  std::vector<Item> values_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Sorted (value, position) pairs of an array: counts and lists the
/// positions of a given value inside an index range by binary search.
class PositionIndex {
 public:
  using Item = std::int64_t;

  PositionIndex() = default;
  explicit PositionIndex(std::span<const Item> values) {
    pairs_.reserve(values.size());
    for (std::size_t p = 0; p < values.size(); ++p) pairs_.emplace_back(values[p], p);
    std::sort(pairs_.begin(), pairs_.end());
  }

  /// Positions in [lo, hi] holding `value`, as an iterator range.
  auto occurrences(Item value, std::size_t lo, std::size_t hi) const {
    auto first = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{value, lo});
    auto last = std::upper_bound(pairs_.begin(), pairs_.end(), std::pair{value, hi});
    return std::pair{first, last};
  }

  std::size_t count(Item value, std::size_t lo, std::size_t hi) const {
    auto [first, last] = occurrences(value, lo, hi);
    return static_cast<std::size_t>(last - first);
  }

  template <typename Out>
  void append(Item value, std::size_t lo, std::size_t hi, Out& out) const {
    auto [first, last] = occurrences(value, lo, hi);
    for (auto it = first; it != last; ++it) out.push_back(it->second);
  }

 private:
  std::vector<std::pair<Item, std::size_t>> pairs_;
};

}  // namespace omv
