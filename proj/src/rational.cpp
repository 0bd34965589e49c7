#include "ramm/rational.hpp"

#include <charconv>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace ramm {
namespace {

using Wide = __int128;

constexpr long long kMaxLL = std::numeric_limits<long long>::max();
constexpr long long kMinLL = std::numeric_limits<long long>::min();

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide gcd_wide(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(Wide v) {
  if (v > Wide(kMaxLL) || v < Wide(kMinLL)) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<long long>(v);
}

std::string wide_to_string(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  Wide a = wide_abs(v);
  std::string digits;
  while (a > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(a % 10)));
    a /= 10;
  }
  if (neg) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

// Reduced rational from wide intermediates. The two-argument constructor
// re-normalizes, which is a no-op on the already-reduced pair.
Rational make_rational(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

Wide pow10_wide(int exponent) {
  // 10^38 overflows __int128; anything near that is out of domain anyway.
  if (exponent > 37) throw std::overflow_error("rational overflow");
  Wide r = 1;
  for (int i = 0; i < exponent; ++i) r *= 10;
  return r;
}

long long parse_ll(std::string_view text) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) throw std::overflow_error("rational overflow");
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

Rational parse_decimal(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a number: '" + original + "'");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Wide mantissa = 0;
  int digits = 0;
  int frac_digits = 0;
  bool seen_point = false;
  size_t i = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_point) return fail();
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      if (digits >= 37) throw std::overflow_error("rational overflow");
      mantissa = mantissa * 10 + (c - '0');
      ++digits;
      if (seen_point) ++frac_digits;
    } else {
      break;
    }
  }
  if (digits == 0) return fail();

  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::string_view etext = text.substr(i + 1);
    if (etext.empty()) return fail();
    int e = 0;
    bool eneg = false;
    size_t j = 0;
    if (etext[j] == '+' || etext[j] == '-') {
      eneg = etext[j] == '-';
      ++j;
    }
    if (j == etext.size()) return fail();
    for (; j < etext.size(); ++j) {
      if (etext[j] < '0' || etext[j] > '9') return fail();
      e = e * 10 + (etext[j] - '0');
      if (e > 1000) throw std::overflow_error("rational overflow");
    }
    exponent = eneg ? -e : e;
    i = text.size();
  }
  if (i != text.size()) return fail();

  if (negative) mantissa = -mantissa;
  int scale = exponent - frac_digits;
  if (scale >= 0) {
    return make_rational(mantissa * pow10_wide(scale), 1);
  }
  return make_rational(mantissa, pow10_wide(-scale));
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Wide n = numerator;
  Wide d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = gcd_wide(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (num.empty() || den.empty()) {
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return Rational(parse_ll(num), parse_ll(den));
  }
  return parse_decimal(text);
}

Rational Rational::from_double(double value) {
  if (value != value || value > 1e300 || value < -1e300) {
    throw std::invalid_argument("number is not finite");
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::invalid_argument("number is not representable");
  return parse_decimal(std::string_view(buf, static_cast<size_t>(ptr - buf)));
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_rational(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                       Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_rational(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                       Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_rational(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return make_rational(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

Rational Rational::floor_value() const {
  long long q = num_ / den_;
  if (num_ < 0 && num_ % den_ != 0) --q;
  return Rational(q);
}

Rational Rational::ceil_value() const {
  long long q = num_ / den_;
  if (num_ > 0 && num_ % den_ != 0) ++q;
  return Rational(q);
}

Rational Rational::round_half_up() const {
  // floor((2|n| + d) / 2d), sign restored: halves move away from zero.
  Wide n = wide_abs(Wide(num_));
  Wide q = (2 * n + den_) / (2 * Wide(den_));
  return Rational(narrow(num_ < 0 ? -q : q));
}

std::string Rational::to_exact_string() const {
  if (den_ == 1) return std::to_string(num_);
  long long rest = den_;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  int places = twos > fives ? twos : fives;
  if (rest != 1 || places > 37) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  // den divides 10^places exactly.
  Wide scaled = wide_abs(Wide(num_)) * (pow10_wide(places) / den_);
  std::string digits = wide_to_string(scaled);
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<size_t>(places), ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (num_ < 0 ? "-" : "") + digits;
}

std::string Rational::to_display_string(int max_places) const {
  if (den_ == 1) return std::to_string(num_);
  Wide scale = pow10_wide(max_places);
  Wide n = wide_abs(Wide(num_)) * scale;
  Wide scaled = (2 * n + den_) / (2 * Wide(den_));  // round half away from zero
  std::string digits = wide_to_string(scaled);
  if (static_cast<int>(digits.size()) <= max_places) {
    digits.insert(0, static_cast<size_t>(max_places) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<size_t>(max_places), ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (num_ < 0 ? "-" : "") + digits;
}

}  // namespace ramm
