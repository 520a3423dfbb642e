#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>

namespace eisencoh {

/// Exact element of ½ℤ, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt fromTwice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt fromInt(std::int64_t value) { return HalfInt(2 * value); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool isInteger() const { return twice_ % 2 == 0; }

  /// Only meaningful when isInteger().
  constexpr std::int64_t toInt() const { return twice_ / 2; }

  /// Largest integer not above the value.
  constexpr std::int64_t floor() const { return twice_ >= 0 ? twice_ / 2 : -((1 - twice_) / 2); }
  constexpr std::int64_t ceil() const { return -HalfInt(-twice_).floor(); }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator+(HalfInt a, std::int64_t b) { return a + fromInt(b); }
  friend constexpr HalfInt operator-(HalfInt a, std::int64_t b) { return a - fromInt(b); }
  friend constexpr HalfInt operator+(std::int64_t a, HalfInt b) { return fromInt(a) + b; }
  friend constexpr HalfInt operator-(std::int64_t a, HalfInt b) { return fromInt(a) - b; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt a, std::int64_t b) { return a.twice_ == 2 * b; }

  /// "3", "-3/2": never a decimal.
  std::string str() const {
    if (isInteger()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}

  std::int64_t twice_ = 0;
};

/// Parses "k" or "k/2".
inline bool parseHalfInt(const std::string& text, HalfInt& out) {
  if (text.empty()) return false;
  auto slash = text.find('/');
  char* end = nullptr;
  long long numerator = std::strtoll(text.c_str(), &end, 10);
  if (slash == std::string::npos) {
    if (end != text.c_str() + text.size()) return false;
    out = HalfInt::fromInt(numerator);
    return true;
  }
  if (end != text.c_str() + slash || text.substr(slash) != "/2") return false;
  out = HalfInt::fromTwice(numerator);
  return true;
}

}  // namespace eisencoh
