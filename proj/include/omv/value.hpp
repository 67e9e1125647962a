#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include "omv/error.hpp"

namespace omv {

/// Integer extended with explicit +inf and -inf sentinels.
///
/// The sentinels occupy the two extreme 64-bit values, so the defaulted
/// three-way comparison on the representation is already the required total
/// order -inf < finite < +inf. Finite values admitted by `validate` stay
/// within +-2^40, far from both sentinels.
class Value {
 public:
  using Rep = std::int64_t;

  constexpr Value() = default;
  constexpr Value(Rep v) : rep_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Value infinity() { return Value(kPosInf); }
  static constexpr Value neg_infinity() { return Value(kNegInf); }

  constexpr bool is_finite() const { return rep_ != kPosInf && rep_ != kNegInf; }
  constexpr bool is_pos_inf() const { return rep_ == kPosInf; }
  constexpr bool is_neg_inf() const { return rep_ == kNegInf; }

  /// Raw integer; only meaningful for finite values.
  constexpr Rep finite() const { return rep_; }

  /// Representation including sentinels; for hashing.
  constexpr Rep raw() const { return rep_; }

  constexpr auto operator<=>(const Value&) const = default;

 private:
  static constexpr Rep kPosInf = std::numeric_limits<Rep>::max();
  static constexpr Rep kNegInf = std::numeric_limits<Rep>::min();

  Rep rep_ = 0;
};

inline constexpr Value kInf = Value::infinity();
inline constexpr Value kNegInf = Value::neg_infinity();

/// Largest magnitude accepted for a finite entry.
inline constexpr Value::Rep kFiniteLimit = Value::Rep{1} << 40;

constexpr std::strong_ordering compare(Value a, Value b) { return a <=> b; }

constexpr Value negate(Value a) {
  if (a.is_pos_inf()) return kNegInf;
  if (a.is_neg_inf()) return kInf;
  return Value(-a.finite());
}

/// Sum in the min-plus sense: anything plus +inf is +inf, and -inf absorbs
/// the remaining finite cases.
constexpr Value add(Value a, Value b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return kInf;
  if (a.is_neg_inf() || b.is_neg_inf()) return kNegInf;
  return Value(a.finite() + b.finite());
}

inline std::string to_string(Value v) {
  if (v.is_pos_inf()) return "inf";
  if (v.is_neg_inf()) return "-inf";
  return std::to_string(v.finite());
}

inline std::ostream& operator<<(std::ostream& os, Value v) {
  return os << to_string(v);
}

/// Parses "inf", "-inf" or a decimal integer.
inline Value parse_value(std::string_view token) {
  if (token == "inf" || token == "+inf") return kInf;
  if (token == "-inf") return kNegInf;
  Value::Rep out = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("not a value: '" + std::string(token) + "'");
  }
  if (!Value(out).is_finite()) {
    throw ParseError("value out of range: '" + std::string(token) + "'");
  }
  return Value(out);
}

}  // namespace omv
