#include "landau/generating.hpp"

#include "landau/coefficients.hpp"
#include "landau/landau_constants.hpp"
#include "support.hpp"

using landau::BigInt;
using landau::ErrorKind;
using landau::Rational;

TEST_CASE("hypergeometric coefficients are squared central binomials over 16^m") {
  const auto f = landau::hypergeom_series(25);
  for (int m = 0; m <= 25; ++m) {
    const Rational c(landau::binomial(2 * m, m), BigInt(1) << (2 * m));
    CHECK(f.coeff(m) == c * c);
  }
}

TEST_CASE("F / (1 - x) generates the Landau constants") {
  const auto g = landau::landau_generating_series(40);
  const auto table = landau::LandauTable::build(40);
  for (int n = 0; n <= 40; ++n) CHECK(g.coeff(n) == table[n]);
}

TEST_CASE("generating functions reproduce the recurrence coefficients") {
  const int T = 40;
  const auto gen = landau::alpha_from_generating(T);
  const auto derived = landau::beta_from_alpha(landau::alpha_table(T + 1));
  REQUIRE(gen.even.size() == 21);
  REQUIRE(gen.odd.size() == 21);
  CHECK(gen.even[0] == Rational(1));
  for (int k = 1; 2 * k <= T; ++k) {
    CAPTURE(k);
    CHECK(gen.even[static_cast<std::size_t>(k)] == derived.alpha_tilde(2 * k));
  }
  for (int k = 0; 2 * k <= T; ++k) {
    CAPTURE(k);
    CHECK(gen.odd[static_cast<std::size_t>(k)] == derived.alpha_tilde(2 * k + 1));
  }
  const auto u = landau::u_series(T);
  for (int s = 0; 2 * s <= T; ++s) {
    CAPTURE(s);
    CHECK(u.coeff(2 * s) == derived.rho(s));
    if (2 * s + 1 <= T) CHECK(u.coeff(2 * s + 1).is_zero());
  }
}

TEST_CASE("quadratic transform identity and nonnegative factors") {
  const auto r = landau::quadratic_transform_report(30);
  CHECK(r.order == 30);
  CHECK(r.identity_holds);
  CHECK(r.even_factors_nonnegative);
  CHECK(r.odd_factor_nonnegative);
  CHECK(r.verdict() == landau::Verdict::ProvenPositive);
  CHECK(landau::quadratic_transform_check(12) == landau::Verdict::ProvenPositive);
  landau::QuadraticTransformReport broken = r;
  broken.identity_holds = false;
  CHECK(broken.verdict() == landau::Verdict::ProvenNegative);
}

TEST_CASE("generating errors") {
  CHECK_ERROR_KIND(landau::alpha_from_generating(1), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(landau::quadratic_transform_check(3), ErrorKind::InvalidArgument);
}
