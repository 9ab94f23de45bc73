#pragma once

#include <vector>

#include "landau/enclosure.hpp"
#include "landau/power_series.hpp"

namespace landau {

/// F(t) = 2F1(1/2, 1/2; 1; t): coefficient of t^m is ((1/2)_m / m!)^2.
PowerSeries hypergeom_series(int T);

/// F(x) / (1 - x) = sum_n G_n x^n.
PowerSeries landau_generating_series(int T);

/// u(x) = x / (2 sin(x/2)) * F(sin^2(x/4)); an even series whose x^{2s}
/// coefficient is rho_s.
PowerSeries u_series(int T);

/// Coefficients read off the two generating functions
///   u(x) cos(x/4)       = 1 + sum_{k>=1} alpha_tilde_{2k}   x^{2k}
///   u(x) sin(x/4) / x   =     sum_{k>=0} alpha_tilde_{2k+1} x^{2k}
/// even[k] is the x^{2k} coefficient of the first (even[0] = 1), odd[k] that
/// of the second, for 2k <= T.
struct GeneratingAlphas {
  std::vector<Rational> even;
  std::vector<Rational> odd;
};

/// Requires T >= 2.
GeneratingAlphas alpha_from_generating(int T);

struct QuadraticTransformReport {
  int order = 0;
  /// F(sin^2(x/4)) == sec^2(x/8) F(tan^4(x/8)) coefficientwise.
  bool identity_holds = false;
  /// sec^2(x/8), F(tan^4(x/8)) and (x/4)/sin(x/4) have no negative coefficient.
  bool even_factors_nonnegative = false;
  /// Same for sec(x/4), the extra factor on the odd side.
  bool odd_factor_nonnegative = false;

  /// ProvenPositive when everything holds, ProvenNegative when an exact
  /// mismatch or negative coefficient was found.
  Verdict verdict() const;
};

/// Requires T >= 4.
QuadraticTransformReport quadratic_transform_report(int T);
Verdict quadratic_transform_check(int T);

}  // namespace landau
