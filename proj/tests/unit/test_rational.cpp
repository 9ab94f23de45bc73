#include "landau/rational.hpp"

#include "support.hpp"

using landau::BigInt;
using landau::DecimalRounding;
using landau::ErrorKind;
using landau::Rational;

TEST_CASE("construction canonicalizes sign and common factors") {
  const Rational q(BigInt(6), BigInt(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(q.to_string() == "-3/2");
  CHECK(Rational(BigInt(10), BigInt(5)).to_string() == "2");
  CHECK(Rational(BigInt(10), BigInt(5)).is_integer());
  CHECK_ERROR_KIND(Rational(BigInt(1), BigInt(0)), ErrorKind::DivisionByZero);
}

TEST_CASE("parse accepts fractions, decimals and exponents at face value") {
  CHECK(Rational::parse("-568756771963/281406257233920") ==
        Rational(BigInt("-568756771963"), BigInt("281406257233920")));
  CHECK(Rational::parse("1.9621") == Rational(BigInt(19621), BigInt(10000)));
  CHECK(Rational::parse("0.12") == Rational(BigInt(3), BigInt(25)));
  CHECK(Rational::parse("5e-5") == Rational(BigInt(1), BigInt(20000)));
  CHECK(Rational::parse("0.66e6") == Rational(660000));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse(".5") == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("parse reads leading zeros as decimal, not octal") {
  CHECK(Rational::parse("0.0590") == Rational(BigInt(59), BigInt(1000)));
  CHECK(Rational::parse("0.1041") == Rational(BigInt(1041), BigInt(10000)));
  CHECK(Rational::parse("010/09") == Rational(BigInt(10), BigInt(9)));
}

TEST_CASE("parse rejects malformed literals") {
  for (const char* bad : {"", "-", "1/", "/2", "1.2.3", "abc", "1e", "1/0x", "."}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), landau::Error);
  }
  CHECK_ERROR_KIND(Rational::parse("1/0"), ErrorKind::DivisionByZero);
}

TEST_CASE("division by zero and negative powers of zero are errors") {
  CHECK_ERROR_KIND(Rational(1) / Rational(0), ErrorKind::DivisionByZero);
  CHECK_ERROR_KIND(Rational(0).pow(-2), ErrorKind::DivisionByZero);
  CHECK(Rational(BigInt(2), BigInt(3)).pow(-3) == Rational(BigInt(27), BigInt(8)));
  CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("factorial and binomial") {
  CHECK(landau::factorial(0) == 1);
  CHECK(landau::factorial(20) == BigInt("2432902008176640000"));
  CHECK(landau::binomial(10, 3) == 120);
  CHECK(landau::binomial(3, 5) == 0);
  // Pascal's rule over a block of rows.
  for (unsigned long n = 1; n < 40; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      CHECK(landau::binomial(n, k) == landau::binomial(n - 1, k - 1) + landau::binomial(n - 1, k));
    }
  }
}

TEST_CASE("fixed-point rendering rounds half to even or truncates") {
  const Rational q(BigInt(12345), BigInt(1000));  // 12.345
  CHECK(landau::to_fixed(q, 2) == "12.34");
  CHECK(landau::to_fixed(Rational(BigInt(12355), BigInt(1000)), 2) == "12.36");
  CHECK(landau::to_fixed(q, 2, DecimalRounding::Truncate) == "12.34");
  CHECK(landau::to_fixed(Rational(BigInt(-1), BigInt(3)), 4) == "-0.3333");
  CHECK(landau::to_fixed(Rational(BigInt(2), BigInt(3)), 4, DecimalRounding::Truncate) == "0.6666");
  CHECK(landau::to_fixed(Rational(BigInt(2), BigInt(3)), 4) == "0.6667");
  CHECK(landau::to_fixed(Rational(7), 0) == "7");
  CHECK(landau::to_fixed(Rational(BigInt(59), BigInt(1000)), 4) == "0.0590");
  CHECK(landau::round_decimal(Rational(BigInt(5), BigInt(2)), 0) == Rational(2));
  CHECK(landau::round_decimal(Rational(BigInt(7), BigInt(2)), 0) == Rational(4));
}

TEST_CASE("property: field laws on random rationals") {
  landau::testing::Generator gen;
  for (int i = 0; i < 300; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.nonzero_rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * c) / c == a);
    CHECK(a - a == Rational(0));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a < b) == (b - a).sign() > 0);
    CHECK(Rational::parse(a.to_string()) == a);
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("property: rounding lands within half a unit and truncation toward zero") {
  landau::testing::Generator gen;
  for (int i = 0; i < 200; ++i) {
    const Rational q = gen.rational(40);
    const int decimals = static_cast<int>(gen.integer(0, 8));
    const Rational unit = Rational(10).pow(-decimals);
    const Rational r = landau::round_decimal(q, decimals);
    const Rational t = landau::round_decimal(q, decimals, DecimalRounding::Truncate);
    CHECK((q - r).abs() * Rational(2) <= unit);
    CHECK((q - t).abs() < unit);
    CHECK(t.abs() <= q.abs());
    CHECK(Rational::parse(landau::to_fixed(q, decimals)) == r);
  }
}
