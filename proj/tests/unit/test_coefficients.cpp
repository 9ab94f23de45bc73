#include "landau/coefficients.hpp"

#include "landau/power_series.hpp"
#include "support.hpp"

using landau::BigInt;
using landau::CoeffTable;
using landau::ErrorKind;
using landau::PowerSeries;
using landau::Rational;

namespace {

const char* const kPublished[] = {"-1/4",
                                  "5/192",
                                  "3/128",
                                  "-341/122880",
                                  "-75/8192",
                                  "7615/8257536",
                                  "2079/262144",
                                  "-679901/1006632960",
                                  "-409875/33554432",
                                  "16210165/17716740096",
                                  "31709469/1073741824",
                                  "-568756771963/281406257233920"};

PowerSeries one_plus(int sign, int T) {
  return PowerSeries({Rational(1), Rational(sign)}, T);
}

// Contribution of alpha_k x^k to
//   w(N+1) - (2 - x + x^2/4) w(N) + (1 - x/2)^2 w(N-1),  x = 1/N,
// using 1/(N+-1) = x/(1 +- x).
PowerSeries alpha_term(int k, int T) {
  const PowerSeries xk = PowerSeries::monomial(Rational(1), k, T);
  const PowerSeries middle({Rational(2), Rational(-1), Rational(BigInt(1), BigInt(4))}, T);
  const PowerSeries lower({Rational(1), Rational(-1), Rational(BigInt(1), BigInt(4))}, T);
  PowerSeries up = PowerSeries::constant(Rational(1), T), down = up;
  for (int i = 0; i < k; ++i) {
    up = up / one_plus(1, T);
    down = down / one_plus(-1, T);
  }
  return xk * up - middle * xk + lower * xk * down;
}

// The logarithms: ln(16(N+1)) - ln(16N) = log1p(x), ln(16(N-1)) - ln(16N) = log1p(-x).
PowerSeries log_term(int T) {
  const PowerSeries lower({Rational(1), Rational(-1), Rational(BigInt(1), BigInt(4))}, T);
  return landau::elementary_series("log1p", Rational(1), T) +
         lower * landau::elementary_series("log1p", Rational(-1), T);
}

}  // namespace

TEST_CASE("alpha_1..alpha_12 equal the published list") {
  const CoeffTable t = landau::alpha_table(12);
  REQUIRE(t.K() == 12);
  for (int k = 1; k <= 12; ++k) {
    CAPTURE(k);
    CHECK(t.alpha(k) == Rational::parse(kPublished[k - 1]));
  }
}

TEST_CASE("d coefficients match the series expansion of the difference operator") {
  const int T = 30;
  const PowerSeries logs = log_term(T);
  for (int s = 3; s <= T; ++s) CHECK(landau::d_coeff(0, s) == -logs.coeff(s));
  landau::DCoefficients cached;
  for (int k = 1; k <= T - 2; ++k) {
    const PowerSeries e = alpha_term(k, T);
    for (int s = 0; s <= k + 1; ++s) CHECK(e.coeff(s).is_zero());
    for (int s = k + 2; s <= T; ++s) {
      CAPTURE(k);
      CAPTURE(s);
      CHECK(landau::d_coeff(k, s) == e.coeff(s));
      CHECK(cached(k, s) == e.coeff(s));
    }
  }
  CHECK(landau::d_coeff(5, 7) == Rational(25));
}

TEST_CASE("computed coefficients make the difference equation vanish to order K+2") {
  const int K = 28, T = K + 2;
  const CoeffTable t = landau::alpha_table(K);
  PowerSeries total = log_term(T);
  for (int k = 1; k <= K; ++k) total = total + t.alpha(k) * alpha_term(k, T);
  for (int s = 0; s <= T; ++s) CHECK(total.coeff(s).is_zero());
}

TEST_CASE("sign pattern of the coefficients up to alpha_200") {
  const CoeffTable t = landau::alpha_table(200);
  for (int l = 0; l < 200; ++l) {
    const int pattern = (static_cast<long>(l) * (l + 1) / 2) % 2 == 0 ? 1 : -1;
    CAPTURE(l);
    CHECK(pattern * t.alpha(l + 1).sign() < 0);
  }
}

TEST_CASE("coefficient errors") {
  CHECK_ERROR_KIND(landau::d_coeff(0, 2), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::d_coeff(2, 3), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::d_coeff(-1, 5), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::alpha_table(0), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::alpha_table(401), ErrorKind::ResourceLimit);
  landau::Limits small;
  small.max_k = 10;
  CHECK_ERROR_KIND(landau::alpha_table(11, small), ErrorKind::ResourceLimit);
  const CoeffTable t = landau::alpha_table(5);
  CHECK_ERROR_KIND(t.alpha(0), ErrorKind::DomainError);
  CHECK_ERROR_KIND(t.alpha(6), ErrorKind::DomainError);
  CHECK_ERROR_KIND(t.with_override(6, Rational(1)), ErrorKind::DomainError);
}

TEST_CASE("override replaces one entry and leaves the original alone") {
  const CoeffTable t = landau::alpha_table(6);
  const CoeffTable u = t.with_override(3, Rational(7));
  CHECK(u.alpha(3) == Rational(7));
  CHECK(t.alpha(3) == Rational(BigInt(3), BigInt(128)));
  for (int k : {1, 2, 4, 5, 6}) CHECK(u.alpha(k) == t.alpha(k));
  const CoeffTable v = CoeffTable::from_values({Rational(1), Rational(2)});
  CHECK(v.K() == 2);
  CHECK(v.alpha(2) == Rational(2));
}

TEST_CASE("derived families") {
  const CoeffTable t = landau::alpha_table(80);
  const auto d = landau::beta_from_alpha(t);
  CHECK(d.K() == 80);
  CHECK(d.beta(1).is_zero());
  CHECK(d.beta(2) == Rational(BigInt(11), BigInt(192)));
  CHECK(d.rho(0) == Rational(1));
  CHECK(d.rho(1) == d.beta(2));
  for (int k = 1; k <= 80; ++k) {
    CAPTURE(k);
    CHECK(d.alpha_tilde(k).sign() > 0);
    CHECK(d.gamma(k) == (k % 2 == 0 ? t.alpha(k) : -t.alpha(k)));
    CHECK(landau::alpha_beta_diagonal(k) == Rational(1));
    if (k % 2 == 1) CHECK(d.beta(k).is_zero());
  }
  for (int s = 1; 2 * s <= 80; ++s) {
    CAPTURE(s);
    const Rational expected = (s % 2 == 1 ? d.beta(2 * s) : -d.beta(2 * s)) /
                              Rational(landau::factorial(static_cast<unsigned long>(2 * s - 1)));
    CHECK(d.rho(s) == expected);
    CHECK(d.rho(s).sign() > 0);
  }
  const auto even = d.alpha_tilde_even();
  const auto odd = d.alpha_tilde_odd();
  CHECK(even.size() == 40);
  CHECK(odd.size() == 40);
  CHECK(even.front() == d.alpha_tilde(2));
  CHECK(odd.front() == d.alpha_tilde(1));
  CHECK(d.alpha_tilde(1) == Rational(BigInt(1), BigInt(4)));
}

TEST_CASE("beta reproduces alpha through the binomial relation") {
  const CoeffTable t = landau::alpha_table(40);
  const auto d = landau::beta_from_alpha(t);
  for (int k = 1; k <= 40; ++k) {
    Rational inner = -Rational(BigInt(1), BigInt(k));
    for (int j = 1; j <= k; ++j) {
      inner += Rational(landau::binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j - 1))) *
               Rational(4).pow(j) * d.beta(j);
    }
    CAPTURE(k);
    CHECK(inner * Rational(4).pow(-k) == t.alpha(k));
  }
}

TEST_CASE("asymptotic deviation") {
  const auto d = landau::beta_from_alpha(landau::alpha_table(61));
  const auto a = landau::coefficient_asymptotic_deviation(d, 10);
  const auto b = landau::coefficient_asymptotic_deviation(d, 30);
  CHECK(landau::certify_sign(a.even - b.even) == landau::Verdict::ProvenPositive);
  CHECK(landau::certify_sign(a.odd - b.odd) == landau::Verdict::ProvenPositive);
  CHECK(a.even.midpoint() < 0.02);
  CHECK_ERROR_KIND(landau::coefficient_asymptotic_deviation(d, 0), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::coefficient_asymptotic_deviation(d, 31), ErrorKind::DomainError);
}
