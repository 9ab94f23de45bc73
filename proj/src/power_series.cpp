#include "landau/power_series.hpp"

#include <algorithm>
#include <string>

#include "landau/error.hpp"

namespace landau {

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::monomial(const Rational& c, int power, int order) {
  std::vector<Rational> coeffs;
  if (power <= order) {
    coeffs.resize(static_cast<std::size_t>(power) + 1);
    coeffs[static_cast<std::size_t>(power)] = c;
  }
  return PowerSeries(std::move(coeffs), order);
}

const Rational& PowerSeries::coeff(int i) const {
  if (i < 0 || i > order_) {
    throw Error(ErrorKind::OrderExceeded,
                "coefficient " + std::to_string(i) + " beyond series order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

int PowerSeries::valuation() const {
  for (int i = 0; i <= order_; ++i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return order_ + 1;
}

PowerSeries PowerSeries::truncate(int order) const {
  if (order > order_) {
    throw Error(ErrorKind::OrderExceeded,
                "cannot extend order " + std::to_string(order_) + " to " + std::to_string(order));
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

PowerSeries PowerSeries::rescale(const Rational& c) const {
  PowerSeries out = *this;
  Rational power(1);
  for (auto& a : out.coeffs_) {
    a *= power;
    power *= c;
  }
  return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& rhs) {
  const int order = std::min(order_, rhs.order_);
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    const Rational& a = coeffs_[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      const Rational& b = rhs.coeffs_[static_cast<std::size_t>(j)];
      if (!b.is_zero()) out[static_cast<std::size_t>(i + j)] += a * b;
    }
  }
  coeffs_ = std::move(out);
  order_ = order;
  return *this;
}

PowerSeries& PowerSeries::operator/=(const PowerSeries& rhs) {
  if (rhs.coeffs_[0].is_zero()) throw Error(ErrorKind::DivisorNotUnit, "series divisor has zero constant term");
  const int order = std::min(order_, rhs.order_);
  const Rational inverse_lead = Rational(1) / rhs.coeffs_[0];
  std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc = coeffs_[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n; ++i) {
      const Rational& b = rhs.coeffs_[static_cast<std::size_t>(i)];
      if (!b.is_zero()) acc -= b * q[static_cast<std::size_t>(n - i)];
    }
    q[static_cast<std::size_t>(n)] = acc * inverse_lead;
  }
  coeffs_ = std::move(q);
  order_ = order;
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

bool agree(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order_, b.order_);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] != b.coeffs_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

PowerSeries ps_arith(const PowerSeries& a, const PowerSeries& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown series operation");
}

PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (!inner.coeff(0).is_zero()) {
    throw Error(ErrorKind::NonzeroConstantTerm, "inner series of a composition must vanish at 0");
  }
  const int v = inner.valuation();
  int order = inner.order();
  if (v <= inner.order()) order = std::min(order, v * (outer.order() + 1) - 1);
  const PowerSeries x = inner.truncate(order);
  // Terms of outer beyond floor(order / v) cannot reach x^order.
  const int last = std::min(outer.order(), v <= inner.order() ? order / v : 0);
  PowerSeries acc = PowerSeries::constant(outer.coeff(last), order);
  for (int i = last - 1; i >= 0; --i) {
    acc = acc * x + PowerSeries::constant(outer.coeff(i), order);
  }
  return acc;
}

Elementary parse_elementary(std::string_view name) {
  if (name == "sin") return Elementary::Sin;
  if (name == "cos") return Elementary::Cos;
  if (name == "tan") return Elementary::Tan;
  if (name == "sec") return Elementary::Sec;
  if (name == "log1p") return Elementary::Log1p;
  if (name == "exp") return Elementary::Exp;
  if (name == "x_over_sin") return Elementary::XOverSin;
  throw Error(ErrorKind::UnknownFunction, "no elementary series named '" + std::string(name) + "'");
}

namespace {

// sum_k (-1)^k x^{2k+parity} / (2k+parity+shift)!
PowerSeries alternating_factorial_series(int parity, int shift, int T) {
  std::vector<Rational> c(static_cast<std::size_t>(T) + 1);
  for (int n = parity, k = 0; n <= T; n += 2, ++k) {
    const Rational term(BigInt(1), factorial(static_cast<unsigned long>(n + shift)));
    c[static_cast<std::size_t>(n)] = (k % 2 == 0) ? term : -term;
  }
  return PowerSeries(std::move(c), T);
}

}  // namespace

PowerSeries elementary_series(Elementary f, const Rational& scale, int T) {
  if (T < 0) throw Error(ErrorKind::InvalidArgument, "series order must be non-negative");
  PowerSeries base = PowerSeries::zero(T);
  switch (f) {
    case Elementary::Sin: base = alternating_factorial_series(1, 0, T); break;
    case Elementary::Cos: base = alternating_factorial_series(0, 0, T); break;
    case Elementary::Tan:
      base = alternating_factorial_series(1, 0, T) / alternating_factorial_series(0, 0, T);
      break;
    case Elementary::Sec:
      base = PowerSeries::constant(Rational(1), T) / alternating_factorial_series(0, 0, T);
      break;
    case Elementary::XOverSin:
      base = PowerSeries::constant(Rational(1), T) / alternating_factorial_series(0, 1, T);
      break;
    case Elementary::Exp: {
      std::vector<Rational> c;
      for (int n = 0; n <= T; ++n) c.emplace_back(BigInt(1), factorial(static_cast<unsigned long>(n)));
      base = PowerSeries(std::move(c), T);
      break;
    }
    case Elementary::Log1p: {
      std::vector<Rational> c(static_cast<std::size_t>(T) + 1);
      for (int n = 1; n <= T; ++n) {
        const Rational term(BigInt(1), BigInt(n));
        c[static_cast<std::size_t>(n)] = (n % 2 == 1) ? term : -term;
      }
      base = PowerSeries(std::move(c), T);
      break;
    }
  }
  return base.rescale(scale);
}

PowerSeries elementary_series(std::string_view name, const Rational& scale, int T) {
  return elementary_series(parse_elementary(name), scale, T);
}

}  // namespace landau
