#include "landau/landau_constants.hpp"

#include <cstdlib>

#include "support.hpp"

using landau::BigInt;
using landau::ErrorKind;
using landau::Limits;
using landau::Rational;

namespace {

// Independent form: G_n = sum_{m<=n} (C(2m, m) / 4^m)^2.
Rational gn_binomial(long n) {
  Rational sum;
  for (long m = 0; m <= n; ++m) {
    const Rational t(landau::binomial(2 * m, m), BigInt(1) << (2 * m));
    sum += t * t;
  }
  return sum;
}

}  // namespace

TEST_CASE("first Landau constants") {
  CHECK(landau::gn_exact(0) == Rational(1));
  CHECK(landau::gn_exact(1) == Rational(BigInt(5), BigInt(4)));
  CHECK(landau::gn_exact(2) == Rational(BigInt(89), BigInt(64)));
  CHECK(landau::gn_exact(3) == Rational(BigInt(381), BigInt(256)));
}

TEST_CASE("direct sum, recurrence table and binomial form agree") {
  const auto table = landau::LandauTable::build(300);
  CHECK(table.n_max() == 300);
  for (long n = 0; n <= 300; n += (n < 40 ? 1 : 37)) {
    CAPTURE(n);
    CHECK(table[n] == landau::gn_exact(n));
    CHECK(table[n] == gn_binomial(n));
  }
  CHECK(landau::gn_table(5).values().size() == 6);
}

TEST_CASE("G_n increases and its denominator is a power of two") {
  const auto table = landau::LandauTable::build(200);
  for (long n = 1; n <= 200; ++n) {
    CHECK(table[n - 1] < table[n]);
    const BigInt den = table[n].denominator();
    CHECK(mpz_popcount(den.get_mpz_t()) == 1);
  }
}

TEST_CASE("pi G_n enclosure holds independently computed digits") {
  // pi G_1000 at 40 digits, from a separate high-precision summation.
  const Rational digits = Rational::parse("10.25830944221981034283242106425227539407");
  const Rational ulp = Rational::parse("1e-38");
  const auto e = landau::pi_gn_enclosure(1000, 200);
  const landau::Enclosure gap = (e - digits).abs();
  CHECK(landau::certify_sign(landau::Enclosure(ulp, 200) - gap) == landau::Verdict::ProvenPositive);
  CHECK(landau::pi_gn_enclosure(landau::gn_exact(1000), 200).intersects(e));
  CHECK(e.width_upper() < 1e-55);
}

TEST_CASE("index and resource errors") {
  CHECK_ERROR_KIND(landau::gn_exact(-1), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::LandauTable::build(-2), ErrorKind::DomainError);
  Limits small;
  small.max_n = 10;
  CHECK_ERROR_KIND(landau::gn_exact(11, small), ErrorKind::ResourceLimit);
  CHECK_ERROR_KIND(landau::LandauTable::build(11, small), ErrorKind::ResourceLimit);
  CHECK_NOTHROW(landau::gn_exact(10, small));
  const auto table = landau::LandauTable::build(4);
  CHECK_ERROR_KIND(table[5], ErrorKind::DomainError);
  CHECK_ERROR_KIND(table[-1], ErrorKind::DomainError);
}

TEST_CASE("limits read from the environment") {
  ::setenv("LANDAU_MAX_N", "77", 1);
  ::setenv("LANDAU_MAX_K", "12", 1);
  const Limits l = Limits::from_environment();
  CHECK(l.max_n == 77);
  CHECK(l.max_k == 12);
  CHECK(l.max_precision_bits == Limits::defaults().max_precision_bits);
  ::setenv("LANDAU_MAX_PRECISION", "lots", 1);
  CHECK_ERROR_KIND(Limits::from_environment(), ErrorKind::InvalidArgument);
  ::setenv("LANDAU_MAX_PRECISION", "-5", 1);
  CHECK_ERROR_KIND(Limits::from_environment(), ErrorKind::InvalidArgument);
  ::unsetenv("LANDAU_MAX_N");
  ::unsetenv("LANDAU_MAX_K");
  ::unsetenv("LANDAU_MAX_PRECISION");
  CHECK(Limits::from_environment().max_n == Limits::defaults().max_n);
}
