#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <mpfr.h>

#include "landau/rational.hpp"

namespace landau {

/// Owning handle for an MPFR value.
class BigFloat {
 public:
  explicit BigFloat(int precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int precision() const noexcept { return static_cast<int>(mpfr_get_prec(value_)); }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  /// Scientific notation with `digits` significant digits, rounded to nearest.
  std::string to_string(int digits) const;

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

enum class Verdict { ProvenPositive, ProvenNegative, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// Closed interval [lo, hi] that is guaranteed to contain a real value. Every
/// operation rounds lo toward -inf and hi toward +inf, so the result contains
/// the exact result for any members of the operands.
class Enclosure {
 public:
  /// Encloses an exact rational at the given precision.
  Enclosure(const Rational& value, int precision_bits);
  /// Takes ownership of already-rounded endpoints; throws if lo > hi.
  Enclosure(BigFloat lo, BigFloat hi);

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  int precision_bits() const noexcept { return precision_; }

  bool contains(const Rational& q) const;
  bool contains(const Enclosure& inner) const;
  bool intersects(const Enclosure& other) const;
  bool contains_zero() const;

  /// Upper bound on hi - lo.
  BigFloat width() const;
  double width_upper() const;
  double midpoint() const;
  /// Midpoint in scientific notation with `digits` significant digits.
  std::string midpoint_string(int digits) const;

  Enclosure operator-() const;
  Enclosure abs() const;
  /// Throws DivisionByZero when the divisor straddles zero.
  Enclosure& operator+=(const Enclosure& rhs);
  Enclosure& operator-=(const Enclosure& rhs);
  Enclosure& operator*=(const Enclosure& rhs);
  Enclosure& operator/=(const Enclosure& rhs);

  friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
  friend Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }

  Enclosure& operator+=(const Rational& rhs) { return *this += Enclosure(rhs, precision_); }
  Enclosure& operator-=(const Rational& rhs) { return *this -= Enclosure(rhs, precision_); }
  Enclosure& operator*=(const Rational& rhs) { return *this *= Enclosure(rhs, precision_); }
  Enclosure& operator/=(const Rational& rhs) { return *this /= Enclosure(rhs, precision_); }

  friend Enclosure operator+(Enclosure a, const Rational& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Rational& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Rational& b) { return a *= b; }
  friend Enclosure operator/(Enclosure a, const Rational& b) { return a /= b; }

  Enclosure pow(unsigned long exponent) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
  int precision_;
};

Verdict certify_sign(const Enclosure& e);

/// Sign verdicts with the precision at which they were obtained.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  int precision_bits = 0;
};

/// Start at `start_bits`, double up to `ceiling_bits`.
struct PrecisionPolicy {
  int start_bits = 128;
  int ceiling_bits = 4096;
};

/// Re-evaluates `make(bits)` at doubling precisions until certify_sign
/// decides, or the ceiling is exhausted.
template <class MakeEnclosure>
Certificate certify_adaptive(MakeEnclosure&& make, const PrecisionPolicy& policy) {
  Certificate cert;
  int bits = policy.start_bits < policy.ceiling_bits ? policy.start_bits : policy.ceiling_bits;
  for (;;) {
    cert.precision_bits = bits;
    cert.verdict = certify_sign(make(bits));
    if (cert.verdict != Verdict::Inconclusive || bits >= policy.ceiling_bits) return cert;
    bits = bits * 2 > policy.ceiling_bits ? policy.ceiling_bits : bits * 2;
  }
}

Enclosure const_pi(int precision_bits);
Enclosure const_euler_gamma(int precision_bits);
Enclosure const_ln2(int precision_bits);
/// ln(q) for q > 0; NonPositiveArgument otherwise.
Enclosure const_ln(const Rational& q, int precision_bits);

}  // namespace landau
