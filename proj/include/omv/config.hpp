#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "omv/error.hpp"

namespace omv {

/// Smallest r with r*r >= n.
constexpr std::size_t ceil_sqrt(std::size_t n) {
  std::size_t r = 0;
  while (r * r < n) ++r;
  return r;
}

/// Smallest r with r*r*r >= n.
constexpr std::size_t ceil_cbrt(std::size_t n) {
  std::size_t r = 0;
  while (r * r * r < n) ++r;
  return r;
}

/// ceil(log2(x)) for x >= 1.
constexpr std::size_t ceil_log2(std::uint64_t x) {
  std::size_t b = 0;
  while ((std::uint64_t{1} << b) < x) ++b;
  return b;
}

/// Hitting set sizing: automatic (ceil(3 * delta * ln n)), an explicit size,
/// or `full`, which takes R = [n] and removes all randomness.
struct HittingSetSize {
  enum class Mode { automatic, fixed, full };
  Mode mode = Mode::automatic;
  std::size_t size = 0;

  static HittingSetSize automatic() { return {}; }
  static HittingSetSize fixed(std::size_t s) { return {Mode::fixed, s}; }
  static HittingSetSize full() { return {Mode::full, 0}; }

  static HittingSetSize parse(const std::string& s) {
    if (s == "auto") return automatic();
    if (s == "full") return full();
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos == s.size() && v >= 0) return fixed(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
    }
    throw ParseError("hitting set size must be auto, full or a count: " + s);
  }
};

/// Tunables shared by every link of a reduction chain. Unset optionals
/// resolve against n when an instance is preprocessed.
struct ReductionConfig {
  std::optional<std::size_t> t;
  std::optional<std::size_t> delta;
  HittingSetSize hitting;
  std::uint64_t seed = 0;
  std::int64_t bound_constant = 4;
  std::size_t repeats = 1;  // >1: independent copies with majority vote
  bool debug = false;       // witness tracking and in-solver assertions

  /// Bucket/slice count; clamped to [1, n].
  std::size_t resolve_t(std::size_t n) const {
    std::size_t v = t.value_or(ceil_sqrt(n));
    return std::clamp<std::size_t>(v, 1, std::max<std::size_t>(n, 1));
  }

  std::size_t resolve_delta(std::size_t n) const {
    return std::max<std::size_t>(1, delta.value_or(ceil_cbrt(n)));
  }

  std::size_t resolve_hitting(std::size_t n) const {
    switch (hitting.mode) {
      case HittingSetSize::Mode::full: return n;
      case HittingSetSize::Mode::fixed: return hitting.size;
      case HittingSetSize::Mode::automatic: break;
    }
    const double d = static_cast<double>(resolve_delta(n));
    return static_cast<std::size_t>(
        std::ceil(3.0 * d * std::log(static_cast<double>(n))));
  }
};

/// SplitMix64 finalizer; derives independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace omv
