#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace landau {

using BigInt = mpz_class;

/// Exact rational number, always held in canonical form: the denominator is
/// positive and shares no factor with the numerator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  /// Throws DivisionByZero when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& value);

  /// Parses "a", "a/b" or a plain decimal literal such as "-1.9621"; the
  /// decimal is taken at face value (19621/10000), never through a double.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  /// Integer power; negative exponents invert (DivisionByZero for 0^-k).
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den", or just "num" for integers.
  std::string to_string() const;
  /// Nearest double; diagnostics only, never used in a verification path.
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const noexcept { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// n! as an exact integer.
BigInt factorial(unsigned long n);
/// binomial(n, k) as an exact integer.
BigInt binomial(unsigned long n, unsigned long k);

enum class DecimalRounding { HalfEven, Truncate };

/// Fixed-point decimal rendering of an exact rational with `decimals` digits
/// after the point.
std::string to_fixed(const Rational& q, int decimals, DecimalRounding mode = DecimalRounding::HalfEven);

/// Rounds `q` to a multiple of 10^-decimals (half-even or toward zero).
Rational round_decimal(const Rational& q, int decimals, DecimalRounding mode = DecimalRounding::HalfEven);

}  // namespace landau
