#include "landau/generating.hpp"

#include <string>

#include "landau/error.hpp"

namespace landau {

namespace {

bool all_nonnegative(const PowerSeries& s) {
  for (const auto& c : s.coeffs()) {
    if (c.sign() < 0) return false;
  }
  return true;
}

// sin^2(x/4) to order T.
PowerSeries sin_squared_quarter(int T) {
  const PowerSeries s = elementary_series(Elementary::Sin, Rational(BigInt(1), BigInt(4)), T);
  return s * s;
}

// F(sin^2(x/4)).
PowerSeries f_of_sin_squared(int T) { return ps_compose(hypergeom_series(T / 2), sin_squared_quarter(T)); }

}  // namespace

PowerSeries hypergeom_series(int T) {
  if (T < 0) throw Error(ErrorKind::InvalidArgument, "series order must be non-negative");
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(T) + 1);
  c.emplace_back(1);
  for (int m = 1; m <= T; ++m) {
    const Rational ratio(BigInt(2 * m - 1), BigInt(2 * m));
    c.push_back(c.back() * ratio * ratio);
  }
  return PowerSeries(std::move(c), T);
}

PowerSeries landau_generating_series(int T) {
  std::vector<Rational> ones(static_cast<std::size_t>(T) + 1, Rational(1));
  return hypergeom_series(T) * PowerSeries(std::move(ones), T);
}

PowerSeries u_series(int T) {
  if (T < 0) throw Error(ErrorKind::InvalidArgument, "series order must be non-negative");
  return elementary_series(Elementary::XOverSin, Rational(BigInt(1), BigInt(2)), T) * f_of_sin_squared(T);
}

GeneratingAlphas alpha_from_generating(int T) {
  if (T < 2) throw Error(ErrorKind::InvalidArgument, "alpha_from_generating needs T >= 2");
  const Rational quarter(BigInt(1), BigInt(4));
  const PowerSeries u = u_series(T);
  const PowerSeries even = u * elementary_series(Elementary::Cos, quarter, T);

  // sin(x/4)/x: shift sin(x/4) (order T+1) down by one.
  const PowerSeries sin_quarter = elementary_series(Elementary::Sin, quarter, T + 1);
  std::vector<Rational> shifted(sin_quarter.coeffs().begin() + 1, sin_quarter.coeffs().end());
  const PowerSeries odd = u * PowerSeries(std::move(shifted), T);

  GeneratingAlphas out;
  for (int k = 0; 2 * k <= T; ++k) {
    out.even.push_back(even.coeff(2 * k));
    out.odd.push_back(odd.coeff(2 * k));
  }
  return out;
}

Verdict QuadraticTransformReport::verdict() const {
  return identity_holds && even_factors_nonnegative && odd_factor_nonnegative ? Verdict::ProvenPositive
                                                                               : Verdict::ProvenNegative;
}

QuadraticTransformReport quadratic_transform_report(int T) {
  if (T < 4) throw Error(ErrorKind::InvalidArgument, "quadratic transform check needs T >= 4");
  const Rational eighth(BigInt(1), BigInt(8));
  const Rational quarter(BigInt(1), BigInt(4));

  const PowerSeries lhs = f_of_sin_squared(T);

  const PowerSeries sec_eighth = elementary_series(Elementary::Sec, eighth, T);
  const PowerSeries sec_sq = sec_eighth * sec_eighth;
  const PowerSeries tan_eighth = elementary_series(Elementary::Tan, eighth, T);
  const PowerSeries tan_sq = tan_eighth * tan_eighth;
  const PowerSeries f_tan4 = ps_compose(hypergeom_series(T / 4), tan_sq * tan_sq);
  const PowerSeries rhs = sec_sq * f_tan4;

  const PowerSeries x_over_sin = elementary_series(Elementary::XOverSin, quarter, T);
  const PowerSeries sec_quarter = elementary_series(Elementary::Sec, quarter, T);

  QuadraticTransformReport report;
  report.order = T;
  report.identity_holds = lhs.order() == T && rhs.order() == T && agree(lhs, rhs);
  report.even_factors_nonnegative = all_nonnegative(sec_sq) && all_nonnegative(f_tan4) && all_nonnegative(x_over_sin);
  report.odd_factor_nonnegative = all_nonnegative(sec_quarter);
  return report;
}

Verdict quadratic_transform_check(int T) { return quadratic_transform_report(T).verdict(); }

}  // namespace landau
