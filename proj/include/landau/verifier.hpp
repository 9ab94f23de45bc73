#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "landau/coefficients.hpp"
#include "landau/enclosure.hpp"
#include "landau/landau_constants.hpp"
#include "landau/report.hpp"

namespace landau {

/// Truncation order l of A_l(N) = ln(16N) + gamma + sum_{k<=l} alpha_k / N^k.
struct ApproximantSpec {
  ApproximantSpec(int l, CoeffTable coeffs);

  int l;
  CoeffTable coeffs;
};

/// sum_{k=1}^{l} alpha_k / N^k with N = n+1, exact.
Rational approximant_rational_part(const ApproximantSpec& spec, std::int64_t n);

/// Encloses A_l(N), N = n+1.
Enclosure approximant(const ApproximantSpec& spec, std::int64_t n, int precision_bits);

/// Encloses eps_l(N) = pi G_n - A_l(N) as (pi G_n - gamma - ln(16N)) - S
/// with the rational part S summed exactly first.
Enclosure epsilon(const ApproximantSpec& spec, std::int64_t n, int precision_bits);

/// Multipliers of the difference equation
///   w(N+1) - middle(N) w(N) + lower(N) w(N-1) = 0
/// satisfied by w(N) = pi G_n: middle = 2 - 1/N + 1/(4N^2), lower = (1 - 1/(2N))^2.
Rational difference_middle(std::int64_t N);
Rational difference_lower(std::int64_t N);

/// Encloses R_l(N) = eps_l(N+1) - middle(N) eps_l(N) + lower(N) eps_l(N-1)
/// for N = n+1 >= 2 (DomainError for n < 1).
Enclosure residual(const ApproximantSpec& spec, std::int64_t n, int precision_bits);

/// Caching evaluator for sweeps over many (n, l) at fixed coefficients.
/// Not safe for concurrent use; give each worker its own instance.
class ErrorTermEvaluator {
 public:
  ErrorTermEvaluator(CoeffTable coeffs, std::int64_t n_max);

  const CoeffTable& coeffs() const noexcept { return coeffs_; }

  /// pi G_n - gamma - ln(16N)
  const Enclosure& transcendental_part(std::int64_t n, int precision_bits);
  /// sum_{k=1}^{l} alpha_k / N^k
  const Rational& partial_sum(std::int64_t n, int l);

  Enclosure epsilon(std::int64_t n, int l, int precision_bits);
  Enclosure approximant(std::int64_t n, int l, int precision_bits);
  Enclosure residual(std::int64_t n, int l, int precision_bits);

 private:
  CoeffTable coeffs_;
  LandauTable landau_;
  std::map<std::pair<std::int64_t, int>, Enclosure> transcendental_;
  std::map<std::int64_t, std::vector<Rational>> partial_sums_;
};

/// Sign of eps_l(N) required by (-1)^{l(l+1)/2} eps_l(N) < 0: the pattern
/// -, +, +, - repeating in l.
Verdict expected_error_sign(int l) noexcept;

struct SweepOptions {
  PrecisionPolicy precision{};
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Certifies (-1)^{l(l+1)/2} eps_l(n+1) < 0 for n in 0..n_max, l in 0..l_max.
/// DomainError if l_max > K.
VerificationReport check_error_sign_pattern(const CoeffTable& coeffs, std::int64_t n_max, int l_max,
                                            const SweepOptions& options = {});

/// A truncation-order pair (lower p, upper q).
struct BoundOrders {
  int p;
  int q;
};

/// p must be 1 or 2 mod 4, q must be 0 or 3 mod 4 (InvalidOrderClass).
void validate_bound_orders(const BoundOrders& orders);

/// Certifies A_p(N) < pi G_n < A_q(N) for n in 0..n_max and every pair.
VerificationReport check_sharp_bounds(const CoeffTable& coeffs, std::int64_t n_max,
                                      const std::vector<BoundOrders>& orders, const SweepOptions& options = {});

/// Certifies (-1)^{l+1} R_{2l}(N) > 0 for n in 1..n_max, l in 0..l_max.
VerificationReport check_residual_sign(const CoeffTable& coeffs, std::int64_t n_max, int l_max,
                                       const SweepOptions& options = {});

/// Certifies for k = 9..k_max
///   1.9621 / ((2k-1)(2pi)^{2k})          <= alpha_tilde_{2k}   <= 2.2032 / ((2k-1)(2pi)^{2k})
///   (4 ln(2k+1) + 0.6551) / (pi (2pi)^{2k+1}) <= alpha_tilde_{2k+1} <= (4 ln(2k+1) + 2.2048) / (pi (2pi)^{2k+1})
/// The decimal constants enter as exact rationals.
VerificationReport check_coefficient_bounds(const DerivedCoeffs& derived, int k_max,
                                            const PrecisionPolicy& precision = {});

enum class CellStatus { Match, Warn, Mismatch };

std::string_view to_string(CellStatus s) noexcept;

/// One displayed ratio compared with its exact value.
struct RatioCell {
  std::string row;
  int k = 0;
  Rational exact;
  int decimals = 0;
  std::string published;
  std::string rounded;    // half-even to `decimals`
  std::string truncated;  // toward zero to `decimals`
  CellStatus status = CellStatus::Mismatch;
  /// |exact - published| <= one unit in the last displayed digit.
  bool within_one_unit = false;
};

struct RatioCheck {
  VerificationReport bounds;
  /// Four rows of nine cells, k = 1..9, row-major.
  std::vector<RatioCell> table;
  /// alpha_tilde_{2k+1} / alpha_tilde_{2k+3} for k = 9..13.
  std::vector<RatioCell> extended_odd;
};

/// Row identifiers of the ratio table, in display order.
inline constexpr const char* kRatioRows[4] = {"even_even", "odd_odd", "even_odd_lower", "even_odd_upper"};

/// Exact bounds (for all k up to k_max in their stated ranges)
///   alpha_tilde_{2k}/alpha_tilde_{2k+2} < 254/5       (k >= 5)
///   alpha_tilde_{2k+1}/alpha_tilde_{2k+3} < 43        (k >= 0)
///   (2k+1) alpha_tilde_{2k+2}/alpha_tilde_{2k+1} < 0.12  (k >= 0)
///   (2k+1) alpha_tilde_{2k+2}/alpha_tilde_{2k+3} < 3.7   (k >= 0)
/// plus the ratio table against its published values.
RatioCheck check_coefficient_ratios(const DerivedCoeffs& derived, int k_max);

}  // namespace landau
