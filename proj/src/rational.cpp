#include "landau/rational.hpp"

#include <cctype>
#include <ostream>
#include <string>

#include "landau/error.hpp"

namespace landau {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorKind::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    result = Rational(BigInt(std::string(num), 10), BigInt(std::string(den), 10));
  } else {
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      body = body.substr(0, e);
    }
    std::string digits;
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
      const auto whole = body.substr(0, dot);
      const auto frac = body.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty())) {
        bad_literal(text);
      }
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(body)) bad_literal(text);
      digits = std::string(body);
    }
    const BigInt mantissa(digits.empty() ? std::string("0") : digits, 10);
    if (exponent >= 0) {
      result = Rational(BigInt(mantissa * pow10(static_cast<unsigned long>(exponent))));
    } else {
      result = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    }
  }
  return negative ? -result : result;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  Rational r;
  mpz_pow_ui(mpq_numref(r.value_.get_mpq_t()), value_.get_num_mpz_t(), e);
  mpz_pow_ui(mpq_denref(r.value_.get_mpq_t()), value_.get_den_mpz_t(), e);
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

// |q| * 10^decimals rounded to an integer.
BigInt scaled_magnitude(const Rational& q, int decimals, DecimalRounding mode) {
  if (decimals < 0) throw Error(ErrorKind::InvalidArgument, "negative decimal count");
  const BigInt scale = pow10(static_cast<unsigned long>(decimals));
  const BigInt num = ::abs(q.numerator()) * scale;
  const BigInt den = q.denominator();
  BigInt quotient;
  BigInt remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (mode == DecimalRounding::HalfEven) {
    const int c = cmp(BigInt(remainder * 2), den);
    if (c > 0 || (c == 0 && mpz_odd_p(quotient.get_mpz_t()))) quotient += 1;
  }
  return quotient;
}

}  // namespace

Rational round_decimal(const Rational& q, int decimals, DecimalRounding mode) {
  const BigInt m = scaled_magnitude(q, decimals, mode);
  const Rational r(m, pow10(static_cast<unsigned long>(decimals)));
  return q.sign() < 0 ? -r : r;
}

std::string to_fixed(const Rational& q, int decimals, DecimalRounding mode) {
  const BigInt m = scaled_magnitude(q, decimals, mode);
  std::string digits = m.get_str();
  if (digits.size() <= static_cast<std::size_t>(decimals)) {
    digits.insert(0, static_cast<std::size_t>(decimals) - digits.size() + 1, '0');
  }
  std::string out;
  if (q.sign() < 0 && m != 0) out.push_back('-');
  const std::size_t split = digits.size() - static_cast<std::size_t>(decimals);
  out.append(digits, 0, split);
  if (decimals > 0) {
    out.push_back('.');
    out.append(digits, split, std::string::npos);
  }
  return out;
}

}  // namespace landau
