#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace shortness {

/// Exact rational with a normalized int64 pair (den > 0, gcd 1).
/// Comparisons cross-multiply in 128-bit arithmetic, so they never round.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Parses "p/q" or "p"; q must be positive.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Smallest integer >= this value.
  std::int64_t ceil() const noexcept;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Toughness value: either a finite rational or infinity (complete graphs).
struct Toughness {
  bool infinite = false;
  Rational value{};

  static Toughness infinity() { return {true, {}}; }
  static Toughness of(Rational r) { return {false, r}; }

  /// True iff this value is >= t (infinity dominates everything).
  bool at_least(const Rational& t) const noexcept { return infinite || value >= t; }
  bool greater_than(const Rational& t) const noexcept { return infinite || value > t; }
  std::string str() const { return infinite ? "inf" : value.str(); }
};

}  // namespace shortness
