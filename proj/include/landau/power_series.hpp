#pragma once

#include <string_view>
#include <vector>

#include "landau/rational.hpp"

namespace landau {

/// Truncated Maclaurin series c_0 + c_1 x + ... + c_T x^T + O(x^{T+1}) with
/// exact coefficients. The order T travels with the value: binary operations
/// produce min(T_a, T_b) and reading past T throws OrderExceeded.
class PowerSeries {
 public:
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  PowerSeries(std::vector<Rational> coeffs, int order);

  static PowerSeries zero(int order) { return PowerSeries({}, order); }
  static PowerSeries constant(const Rational& c, int order) { return PowerSeries({c}, order); }
  /// c x^power.
  static PowerSeries monomial(const Rational& c, int power, int order);

  int order() const noexcept { return order_; }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Index of the first nonzero coefficient, or order+1 if none.
  int valuation() const;

  PowerSeries truncate(int order) const;
  /// f(c x).
  PowerSeries rescale(const Rational& c) const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const PowerSeries& rhs);
  /// DivisorNotUnit when rhs(0) = 0.
  PowerSeries& operator/=(const PowerSeries& rhs);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  friend PowerSeries operator/(PowerSeries a, const PowerSeries& b) { return a /= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  PowerSeries operator-() const;

  /// Coefficientwise equality up to the shared order.
  friend bool agree(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order_ == b.order_ && agree(a, b);
  }

 private:
  std::vector<Rational> coeffs_;  // size order_ + 1
  int order_;
};

enum class ArithOp { Add, Sub, Mul, Div };

PowerSeries ps_arith(const PowerSeries& a, const PowerSeries& b, ArithOp op);

/// outer(inner(x)) by Horner accumulation. Requires inner(0) = 0
/// (NonzeroConstantTerm otherwise). With v = valuation(inner) the result is
/// exact to order min(inner.order, v*(outer.order+1) - 1).
PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner);

enum class Elementary { Sin, Cos, Tan, Sec, Log1p, Exp, XOverSin };

/// UnknownFunction for names other than sin, cos, tan, sec, log1p, exp,
/// x_over_sin.
Elementary parse_elementary(std::string_view name);

/// Maclaurin series of f(scale * x) to order T. x_over_sin is
/// (scale x) / sin(scale x); tan and sec are built by series division.
PowerSeries elementary_series(Elementary f, const Rational& scale, int T);
PowerSeries elementary_series(std::string_view name, const Rational& scale, int T);

}  // namespace landau
