#include "landau/enclosure.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "landau/error.hpp"

namespace landau {

BigFloat::BigFloat(int precision_bits) {
  if (precision_bits < MPFR_PREC_MIN || precision_bits > MPFR_PREC_MAX) {
    throw Error(ErrorKind::InvalidArgument, "precision out of range: " + std::to_string(precision_bits));
  }
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ProvenPositive: return "ProvenPositive";
    case Verdict::ProvenNegative: return "ProvenNegative";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Enclosure::Enclosure(const Rational& value, int precision_bits)
    : lo_(precision_bits), hi_(precision_bits), precision_(precision_bits) {
  mpfr_set_q(lo_.get(), value.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), value.raw().get_mpq_t(), MPFR_RNDU);
}

Enclosure::Enclosure(BigFloat lo, BigFloat hi)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(std::max(lo_.precision(), hi_.precision())) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || compare(lo_, hi_) > 0) {
    throw Error(ErrorKind::InvalidArgument, "enclosure endpoints out of order");
  }
}

bool Enclosure::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.raw().get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const {
  return compare(lo_, inner.lo_) <= 0 && compare(inner.hi_, hi_) <= 0;
}

bool Enclosure::intersects(const Enclosure& other) const {
  return compare(lo_, other.hi_) <= 0 && compare(other.lo_, hi_) <= 0;
}

bool Enclosure::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

BigFloat Enclosure::width() const {
  BigFloat w(precision_);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

double Enclosure::width_upper() const { return width().to_double(MPFR_RNDU); }

double Enclosure::midpoint() const {
  BigFloat mid(precision_ + 1);
  mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid.to_double();
}

std::string Enclosure::midpoint_string(int digits) const {
  BigFloat mid(precision_ + 1);
  mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid.to_string(digits);
}

Enclosure Enclosure::operator-() const {
  BigFloat lo(precision_);
  BigFloat hi(precision_);
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  BigFloat lo(precision_);
  BigFloat hi(precision_);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  if (compare(hi, hi_) < 0) mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure& Enclosure::operator+=(const Enclosure& rhs) {
  precision_ = std::max(precision_, rhs.precision_);
  BigFloat lo(precision_);
  BigFloat hi(precision_);
  mpfr_add(lo.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& rhs) {
  precision_ = std::max(precision_, rhs.precision_);
  BigFloat lo(precision_);
  BigFloat hi(precision_);
  mpfr_sub(lo.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min over the four endpoint combinations rounded down, max rounded up.
void corner_hull(BinaryOp op, const Enclosure& a, const Enclosure& b, BigFloat& lo, BigFloat& hi) {
  const std::array<mpfr_srcptr, 2> xs{a.lo().get(), a.hi().get()};
  const std::array<mpfr_srcptr, 2> ys{b.lo().get(), b.hi().get()};
  BigFloat down(lo.precision());
  BigFloat up(hi.precision());
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      op(down.get(), x, y, MPFR_RNDD);
      op(up.get(), x, y, MPFR_RNDU);
      if (first || compare(down, lo) < 0) mpfr_set(lo.get(), down.get(), MPFR_RNDD);
      if (first || compare(up, hi) > 0) mpfr_set(hi.get(), up.get(), MPFR_RNDU);
      first = false;
    }
  }
}

}  // namespace

Enclosure& Enclosure::operator*=(const Enclosure& rhs) {
  precision_ = std::max(precision_, rhs.precision_);
  BigFloat lo(precision_);
  BigFloat hi(precision_);
  corner_hull(&mpfr_mul, *this, rhs, lo, hi);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Enclosure& Enclosure::operator/=(const Enclosure& rhs) {
  if (rhs.contains_zero()) throw Error(ErrorKind::DivisionByZero, "enclosure divisor contains zero");
  precision_ = std::max(precision_, rhs.precision_);
  BigFloat lo(precision_);
  BigFloat hi(precision_);
  corner_hull(&mpfr_div, *this, rhs, lo, hi);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Enclosure Enclosure::pow(unsigned long exponent) const {
  Enclosure result(Rational(1), precision_);
  Enclosure base = *this;
  bool have_result = false;
  while (exponent > 0) {
    if (exponent & 1UL) {
      result = have_result ? result * base : base;
      have_result = true;
    }
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Verdict certify_sign(const Enclosure& e) {
  if (e.lo().sign() > 0) return Verdict::ProvenPositive;
  if (e.hi().sign() < 0) return Verdict::ProvenNegative;
  return Verdict::Inconclusive;
}

namespace {

template <class Fill>
Enclosure make_constant(int precision_bits, Fill fill) {
  if (precision_bits < 16) throw Error(ErrorKind::InvalidArgument, "constants need at least 16 bits");
  BigFloat lo(precision_bits);
  BigFloat hi(precision_bits);
  fill(lo.get(), MPFR_RNDD);
  fill(hi.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

}  // namespace

// MPFR returns correctly rounded values, so rounding toward -inf and +inf
// brackets the constant.
Enclosure const_pi(int precision_bits) {
  return make_constant(precision_bits, [](mpfr_ptr x, mpfr_rnd_t r) { mpfr_const_pi(x, r); });
}

Enclosure const_euler_gamma(int precision_bits) {
  return make_constant(precision_bits, [](mpfr_ptr x, mpfr_rnd_t r) { mpfr_const_euler(x, r); });
}

Enclosure const_ln2(int precision_bits) {
  return make_constant(precision_bits, [](mpfr_ptr x, mpfr_rnd_t r) { mpfr_const_log2(x, r); });
}

Enclosure const_ln(const Rational& q, int precision_bits) {
  if (q.sign() <= 0) throw Error(ErrorKind::NonPositiveArgument, "ln of " + q.to_string());
  // ln is increasing, so ln(q) lies between ln of q rounded down and up.
  const Enclosure argument(q, precision_bits + 32);
  BigFloat lo(precision_bits);
  BigFloat hi(precision_bits);
  mpfr_log(lo.get(), argument.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), argument.hi().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

}  // namespace landau
