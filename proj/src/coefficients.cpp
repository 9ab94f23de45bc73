#include "landau/coefficients.hpp"

#include <string>

#include "landau/error.hpp"

namespace landau {

namespace {

void check_d_index(int k, int s) {
  if (s < 3 || k < 0 || k > s - 2) {
    throw Error(ErrorKind::DomainError,
                "d_{" + std::to_string(k) + "," + std::to_string(s) + "} is not defined");
  }
}

Rational d_zero(int s) {
  const Rational even_part = (s % 2 == 0) ? Rational(BigInt(2), BigInt(s)) : Rational(0);
  return even_part - Rational(BigInt(1), BigInt(s - 1)) + Rational(BigInt(1), BigInt(4 * (s - 2)));
}

// ((-1)^m + 1) P(m) - P(m-1) + P(m-2)/4 with P(i) = (k)_i / i!.
Rational d_from_quotients(int m, const BigInt& p_m, const BigInt& p_m1, const BigInt& p_m2) {
  BigInt whole = -p_m1;
  if (m % 2 == 0) whole += 2 * p_m;
  return Rational(whole) + Rational(p_m2, BigInt(4));
}

}  // namespace

Rational d_coeff(int k, int s) {
  check_d_index(k, s);
  if (k == s - 2) return Rational(static_cast<long>(s - 2) * (s - 2));
  if (k == 0) return d_zero(s);
  const int m = s - k;
  // (k)_i / i! for i = 0..m by incremental products.
  std::vector<BigInt> p(static_cast<std::size_t>(m) + 1);
  p[0] = 1;
  for (int i = 0; i < m; ++i) {
    p[i + 1] = p[i] * (k + i);
    mpz_divexact_ui(p[i + 1].get_mpz_t(), p[i + 1].get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return d_from_quotients(m, p[m], p[m - 1], p[m - 2]);
}

const BigInt& DCoefficients::rising_over_factorial(int k, int m) {
  if (static_cast<std::size_t>(k) >= diagonals_.size()) diagonals_.resize(static_cast<std::size_t>(k) + 1);
  auto& diagonal = diagonals_[static_cast<std::size_t>(k)];
  if (diagonal.empty()) diagonal.emplace_back(1);
  while (diagonal.size() <= static_cast<std::size_t>(m)) {
    const auto i = static_cast<long>(diagonal.size()) - 1;
    BigInt next = diagonal.back() * (k + i);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i + 1));
    diagonal.push_back(std::move(next));
  }
  return diagonal[static_cast<std::size_t>(m)];
}

Rational DCoefficients::operator()(int k, int s) {
  check_d_index(k, s);
  if (k == s - 2) return Rational(static_cast<long>(s - 2) * (s - 2));
  if (k == 0) return d_zero(s);
  const int m = s - k;
  const BigInt& p_m = rising_over_factorial(k, m);
  return d_from_quotients(m, p_m, rising_over_factorial(k, m - 1), rising_over_factorial(k, m - 2));
}

CoeffTable CoeffTable::from_values(std::vector<Rational> alpha) {
  if (alpha.empty()) throw Error(ErrorKind::InvalidArgument, "coefficient table must be nonempty");
  return CoeffTable(std::make_shared<const std::vector<Rational>>(std::move(alpha)));
}

const Rational& CoeffTable::alpha(int k) const {
  if (k < 1 || k > K()) {
    throw Error(ErrorKind::DomainError, "alpha_" + std::to_string(k) + " outside table of size " + std::to_string(K()));
  }
  return (*alpha_)[static_cast<std::size_t>(k - 1)];
}

CoeffTable CoeffTable::with_override(int k, const Rational& value) const {
  alpha(k);
  std::vector<Rational> copy(*alpha_);
  copy[static_cast<std::size_t>(k - 1)] = value;
  return from_values(std::move(copy));
}

CoeffTable alpha_table(int K, const Limits& limits) {
  if (K < 1) throw Error(ErrorKind::DomainError, "K must be positive");
  if (K > limits.max_k) {
    throw Error(ErrorKind::ResourceLimit,
                "K = " + std::to_string(K) + " exceeds ceiling " + std::to_string(limits.max_k));
  }
  DCoefficients d;
  std::vector<Rational> alpha;
  alpha.reserve(static_cast<std::size_t>(K));
  for (int s = 3; s <= K + 2; ++s) {
    Rational rhs = d(0, s);
    for (int k = 1; k <= s - 3; ++k) rhs -= d(k, s) * alpha[static_cast<std::size_t>(k - 1)];
    alpha.push_back(rhs / d(s - 2, s));
  }
  return CoeffTable::from_values(std::move(alpha));
}

namespace {

Rational power_of_four(int e) { return Rational(4).pow(e); }

// (-1)^(floor(k/2)+1)
int alpha_tilde_sign(int k) { return ((k / 2 + 1) % 2 == 0) ? 1 : -1; }

}  // namespace

Rational alpha_beta_diagonal(int k) {
  if (k < 1) throw Error(ErrorKind::DomainError, "k must be positive");
  const Rational fact_k1(factorial(static_cast<unsigned long>(k - 1)));
  return power_of_four(-k) * fact_k1 * power_of_four(k) / (fact_k1 * Rational(factorial(0)));
}

DerivedCoeffs beta_from_alpha(const CoeffTable& table) {
  const int K = table.K();
  DerivedCoeffs out;
  out.alpha_tilde_.reserve(static_cast<std::size_t>(K));
  out.gamma_.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    const Rational& a = table.alpha(k);
    const Rational scaled = a / Rational(factorial(static_cast<unsigned long>(k - 1)));
    out.alpha_tilde_.push_back(alpha_tilde_sign(k) > 0 ? scaled : -scaled);
    out.gamma_.push_back(k % 2 == 0 ? a : -a);
  }

  // Lower-triangular with unit diagonal: solve for beta_k in increasing k.
  out.beta_.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    Rational bracket = -Rational(BigInt(1), BigInt(k));
    for (int j = 1; j < k; ++j) {
      const Rational& b = out.beta_[static_cast<std::size_t>(j - 1)];
      if (b.is_zero()) continue;
      bracket += Rational(binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j - 1))) *
                 power_of_four(j) * b;
    }
    out.beta_.push_back(table.alpha(k) - power_of_four(-k) * bracket);
  }

  out.rho_.reserve(static_cast<std::size_t>(K / 2) + 1);
  out.rho_.emplace_back(1);
  for (int s = 1; 2 * s <= K; ++s) {
    const Rational scaled = out.beta_[static_cast<std::size_t>(2 * s - 1)] /
                            Rational(factorial(static_cast<unsigned long>(2 * s - 1)));
    out.rho_.push_back(s % 2 == 1 ? scaled : -scaled);
  }
  return out;
}

namespace {

const Rational& checked_at(const std::vector<Rational>& v, int index, int offset, const char* name) {
  const int i = index - offset;
  if (i < 0 || i >= static_cast<int>(v.size())) {
    throw Error(ErrorKind::DomainError, std::string(name) + "_" + std::to_string(index) + " out of range");
  }
  return v[static_cast<std::size_t>(i)];
}

}  // namespace

const Rational& DerivedCoeffs::alpha_tilde(int k) const { return checked_at(alpha_tilde_, k, 1, "alpha_tilde"); }
const Rational& DerivedCoeffs::beta(int j) const { return checked_at(beta_, j, 1, "beta"); }
const Rational& DerivedCoeffs::rho(int s) const { return checked_at(rho_, s, 0, "rho"); }
const Rational& DerivedCoeffs::gamma(int k) const { return checked_at(gamma_, k, 1, "gamma"); }

std::vector<Rational> DerivedCoeffs::alpha_tilde_even() const {
  std::vector<Rational> out;
  for (int k = 2; k <= K(); k += 2) out.push_back(alpha_tilde(k));
  return out;
}

std::vector<Rational> DerivedCoeffs::alpha_tilde_odd() const {
  std::vector<Rational> out;
  for (int k = 1; k <= K(); k += 2) out.push_back(alpha_tilde(k));
  return out;
}

AsymptoticDeviation coefficient_asymptotic_deviation(const DerivedCoeffs& derived, int k, int precision_bits) {
  if (k < 1 || 2 * k + 1 > derived.K()) {
    throw Error(ErrorKind::DomainError, "deviation index k = " + std::to_string(k) + " needs 2k+1 <= K");
  }
  const int bits = precision_bits;
  const Enclosure two_pi = const_pi(bits) * Rational(2);
  const Rational one(1);

  // (-1)^{k+1} alpha_{2k} = (2k-1)! alpha_tilde_{2k}
  const Rational even_scaled = derived.alpha_tilde(2 * k) * Rational(2 * k - 1) / Rational(2);
  Enclosure even = two_pi.pow(static_cast<unsigned long>(2 * k)) * even_scaled - one;

  // (-1)^{k+1} alpha_{2k+1} = (2k)! alpha_tilde_{2k+1}
  const Rational odd_scaled = derived.alpha_tilde(2 * k + 1) / Rational(8);
  Enclosure odd = two_pi.pow(static_cast<unsigned long>(2 * k + 2)) * odd_scaled /
                      const_ln(Rational(2 * k + 1), bits) -
                  one;
  return {even.abs(), odd.abs()};
}

}  // namespace landau
