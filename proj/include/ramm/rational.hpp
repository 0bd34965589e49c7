#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ramm {

/// Exact rational number on a 64-bit numerator/denominator pair.
///
/// Every value is kept in lowest terms with a positive denominator, so
/// equality is plain memberwise comparison and results are independent of
/// the computation path. Intermediates use 128-bit arithmetic; operations
/// throw std::overflow_error if a reduced result does not fit in 64 bits.
///
/// Scheduling decisions are argmin/argmax selections over sums of these
/// values, which is why the type is exact end to end: a single ulp of
/// floating noise could flip a tie and change a schedule.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator);

  /// Parses "42", "-7", "2.5", "12.01", "1e3", "2.5e-1" or "5/2".
  /// Throws std::invalid_argument on malformed text, std::overflow_error
  /// if the value does not fit.
  static Rational parse(std::string_view text);

  /// Exact value of the shortest decimal that round-trips to `value`
  /// (0.1 -> 1/10). Throws std::invalid_argument for NaN/infinity.
  static Rational from_double(double value);

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error when dividing by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Largest integer <= value.
  Rational floor_value() const;
  /// Smallest integer >= value.
  Rational ceil_value() const;
  /// Nearest integer, halves away from zero (2.5 -> 3).
  Rational round_half_up() const;

  /// Lossless rendering: "7", "2.5" when the denominator is a product of
  /// 2s and 5s, otherwise "5/3". parse() accepts every output.
  std::string to_exact_string() const;

  /// Human rendering: integers without a point, otherwise a decimal
  /// rounded (half away from zero) to at most `max_places` places with
  /// trailing zeros trimmed. "1/7" -> "0.142857".
  std::string to_display_string(int max_places = 6) const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Time quantity used throughout: execution times, ready times, makespans.
/// The unit is abstract; benchmark inputs use small integers.
using Duration = Rational;

}  // namespace ramm
