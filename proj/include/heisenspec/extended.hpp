#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "heisenspec/errors.hpp"

namespace heisenspec {

/// A nonnegative integer or infinity. Infinity is a separate state, not a
/// large number: arithmetic on it never wraps and `value()` refuses it.
class ExtendedInt {
 public:
  constexpr ExtendedInt() : value_(0) {}
  constexpr ExtendedInt(std::uint64_t value) : value_(value) {}  // NOLINT implicit by intent

  static constexpr ExtendedInt infinity() {
    ExtendedInt e;
    e.value_.reset();
    return e;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }

  std::uint64_t value() const {
    if (!value_) throw ValidationError("value() called on an infinite ExtendedInt");
    return *value_;
  }

  /// Infinity maps to +inf.
  double to_double() const {
    return value_ ? static_cast<double>(*value_) : std::numeric_limits<double>::infinity();
  }

  friend constexpr ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
    if (!a.value_ || !b.value_) return infinity();
    return ExtendedInt(*a.value_ + *b.value_);
  }
  ExtendedInt& operator+=(ExtendedInt other) { return *this = *this + other; }

  friend constexpr bool operator==(const ExtendedInt&, const ExtendedInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
    if (!a.value_ && !b.value_) return std::strong_ordering::equal;
    if (!a.value_) return std::strong_ordering::greater;
    if (!b.value_) return std::strong_ordering::less;
    return *a.value_ <=> *b.value_;
  }

  /// "inf" or the decimal value.
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

 private:
  std::optional<std::uint64_t> value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedInt& e) {
  return os << e.to_string();
}

}  // namespace heisenspec
