#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace omv {

/// Multiset of (key, payload) pairs over the bounded key domain
/// [0, max_key]. A Fenwick tree over keys gives O(log K) insert, remove,
/// min and count_le; enumerate_le costs O(log K) per distinct key visited
/// plus the output size.
template <typename Payload>
class OrderedMultiset {
 public:
  using Key = std::int64_t;

  explicit OrderedMultiset(Key max_key)
      : max_key_(max_key),
        tree_(static_cast<std::size_t>(max_key) + 2, 0),
        buckets_(static_cast<std::size_t>(max_key) + 1) {
    if (max_key < 0) throw std::invalid_argument("negative key bound");
    while ((std::size_t{1} << (log_ + 1)) <= buckets_.size()) ++log_;
  }

  Key max_key() const { return max_key_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  void insert(Key key, const Payload& p) {
    check(key);
    buckets_[static_cast<std::size_t>(key)].insert(p);
    bump(key, +1);
    ++size_;
  }

  void remove(Key key, const Payload& p) {
    check(key);
    auto& b = buckets_[static_cast<std::size_t>(key)];
    auto it = b.find(p);
    if (it == b.end()) throw std::out_of_range("remove: pair not present");
    b.erase(it);
    bump(key, -1);
    --size_;
  }

  std::optional<Key> min() const {
    if (size_ == 0) return std::nullopt;
    return kth_key(1);
  }

  /// Number of elements with key <= x.
  std::size_t count_le(Key x) const {
    if (x < 0) return 0;
    if (x > max_key_) x = max_key_;
    std::int64_t sum = 0;
    for (std::size_t pos = static_cast<std::size_t>(x) + 1; pos > 0; pos &= pos - 1) {
      sum += tree_[pos];
    }
    return static_cast<std::size_t>(sum);
  }

  /// Payloads with key <= x in key order, stopping after cap + 1 of them so
  /// callers can tell "more than cap" apart.
  std::vector<Payload> enumerate_le(Key x, std::size_t cap) const {
    std::vector<Payload> out;
    const std::size_t want = std::min(count_le(x), cap + 1);
    while (out.size() < want) {
      const Key key = kth_key(out.size() + 1);
      for (const Payload& p : buckets_[static_cast<std::size_t>(key)]) {
        if (out.size() == want) break;
        out.push_back(p);
      }
    }
    return out;
  }

 private:
  void check(Key key) const {
    if (key < 0 || key > max_key_) throw std::out_of_range("key out of domain");
  }

  void bump(Key key, std::int64_t d) {
    for (std::size_t pos = static_cast<std::size_t>(key) + 1; pos < tree_.size();
         pos += pos & (~pos + 1)) {
      tree_[pos] += d;
    }
  }

  /// Key holding the m-th smallest element (1-based m <= size).
  Key kth_key(std::size_t m) const {
    std::size_t pos = 0;
    std::int64_t rest = static_cast<std::int64_t>(m);
    for (std::size_t step = std::size_t{1} << log_; step > 0; step >>= 1) {
      if (pos + step < tree_.size() && tree_[pos + step] < rest) {
        pos += step;
        rest -= tree_[pos];
      }
    }
    return static_cast<Key>(pos);  // pos + 1 is the 1-based slot
  }

  Key max_key_;
  std::vector<std::int64_t> tree_;
  std::vector<std::multiset<Payload>> buckets_;
  std::size_t size_ = 0;
  unsigned log_ = 0;
};

}  // namespace omv
