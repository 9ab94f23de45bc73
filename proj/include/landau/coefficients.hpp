#pragma once

#include <memory>
#include <span>
#include <vector>

#include "landau/enclosure.hpp"
#include "landau/limits.hpp"
#include "landau/rational.hpp"

namespace landau {

/// Coefficient d_{k,s} of x^s contributed by alpha_k (k >= 1) or by the
/// logarithmic terms (k = 0) when the expansion in powers of x = 1/N is
/// substituted into w(N+1) - (2 - x + x^2/4) w(N) + (1 - x/2)^2 w(N-1) = 0.
///
/// Defined for s >= 3 and 0 <= k <= s-2; DomainError elsewhere.
Rational d_coeff(int k, int s);

/// Caches the rising-factorial quotients (k)_m / m! along each diagonal so
/// that repeated d_{k,s} lookups cost one multiply-add each.
class DCoefficients {
 public:
  Rational operator()(int k, int s);

 private:
  const BigInt& rising_over_factorial(int k, int m);
  std::vector<std::vector<BigInt>> diagonals_;
};

/// alpha_1..alpha_K of pi G_n ~ ln(16N) + gamma + sum alpha_k / N^k, N = n+1.
class CoeffTable {
 public:
  /// Wraps an explicit coefficient list (alpha_1 first). Used by tests and
  /// by the CLI's fault-injection flag; no invariant is checked here.
  static CoeffTable from_values(std::vector<Rational> alpha);

  int K() const noexcept { return static_cast<int>(alpha_->size()); }
  /// 1-based; DomainError outside 1..K.
  const Rational& alpha(int k) const;
  std::span<const Rational> values() const noexcept { return *alpha_; }

  /// Copy with alpha_k replaced.
  CoeffTable with_override(int k, const Rational& value) const;

 private:
  explicit CoeffTable(std::shared_ptr<const std::vector<Rational>> alpha) : alpha_(std::move(alpha)) {}
  std::shared_ptr<const std::vector<Rational>> alpha_;
};

/// Solves d_{s-2,s} alpha_{s-2} + ... + d_{1,s} alpha_1 - d_{0,s} = 0 for
/// s = 3..K+2 in exact arithmetic. ResourceLimit above limits.max_k.
CoeffTable alpha_table(int K, const Limits& limits = Limits::defaults());

/// Families derived from alpha:
///   alpha_tilde_k = (-1)^(floor(k/2)+1) alpha_k / (k-1)!   (all positive)
///   beta_j        from alpha_k = 4^-k [ -1/k + sum_j (k-1)! 4^j beta_j / ((j-1)!(k-j)!) ]
///   rho_s         = (-1)^(s+1) beta_{2s} / (2s-1)!, rho_0 = 1
///   gamma_k       = (-1)^k alpha_k   (expansion in powers of 1/(n+1/2))
class DerivedCoeffs {
 public:
  int K() const noexcept { return static_cast<int>(alpha_tilde_.size()); }

  const Rational& alpha_tilde(int k) const;
  const Rational& beta(int j) const;
  /// s = 0..K/2.
  const Rational& rho(int s) const;
  const Rational& gamma(int k) const;

  /// alpha_tilde_{2k}, k = 1..K/2 (index 0 holds k = 1).
  std::vector<Rational> alpha_tilde_even() const;
  /// alpha_tilde_{2k+1}, k = 0..(K-1)/2.
  std::vector<Rational> alpha_tilde_odd() const;

 private:
  friend DerivedCoeffs beta_from_alpha(const CoeffTable& table);
  std::vector<Rational> alpha_tilde_;
  std::vector<Rational> beta_;
  std::vector<Rational> rho_;
  std::vector<Rational> gamma_;
};

DerivedCoeffs beta_from_alpha(const CoeffTable& table);

/// Diagonal entry multiplying beta_k in the alpha/beta relation; equals 1.
Rational alpha_beta_diagonal(int k);

/// Relative deviations of alpha_{2k} and alpha_{2k+1} from their leading
/// large-k approximations
///   alpha_{2k}   ~ (-1)^{k+1} 2 (2k-2)! / (2 pi)^{2k}
///   alpha_{2k+1} ~ (-1)^{k+1} 8 (2k)! ln(2k+1) / (2 pi)^{2k+2}.
struct AsymptoticDeviation {
  Enclosure even;
  Enclosure odd;
};

/// DomainError unless 1 <= k and 2k+1 <= K.
AsymptoticDeviation coefficient_asymptotic_deviation(const DerivedCoeffs& derived, int k,
                                                     int precision_bits = 256);

}  // namespace landau
