#pragma once

#include <string>
#include <vector>

#include "landau/coefficients.hpp"
#include "landau/report.hpp"

namespace landau {

/// Coefficient of N^-s in the residual R_l(N):
///   r_{l,s} = -(d_{l,s} alpha_l + ... + d_{1,s} alpha_1 - d_{0,s}).
/// DomainError unless s >= l+3 and l <= K.
Rational r_coeff(int l, int s, const CoeffTable& coeffs);

/// Even and odd alpha-parts of (-1)^l r_{2l,2j+2}:
///   even: (-1)^{l+1} sum_{k=0}^{l}   d_{2k,2j+2}   alpha_{2k}   with alpha_0 = -1
///   odd:  (-1)^{l+1} sum_{k=0}^{l-1} d_{2k+1,2j+2} alpha_{2k+1}
/// Both need j >= l and 2l <= K.
Rational r_even_sum(int l, int j, const CoeffTable& coeffs);
Rational r_odd_sum(int l, int j, const CoeffTable& coeffs);

struct ProofCheckRecord {
  int l = 0;
  int j = 0;
  Rational r_even_sum;
  Rational r_odd_sum;
  /// (-1)^l [ alpha_{2l+3} (d_{2l+3,2j+1} + d_{2l+3,2j+2}/2)
  ///        + alpha_{2l+1} (d_{2l+1,2j+1} + d_{2l+1,2j+2}/2) ]
  Rational o_term;
  /// Same with alpha_{2l+4}, alpha_{2l+2}.
  Rational e_term;
};

/// DomainError unless K >= 2l+4 and j >= l+4.
ProofCheckRecord compute_odd_even_terms(const CoeffTable& coeffs, int l, int j);

/// (-1)^l r_{2l,2j+2} > 0 for l = 0..l_max, j = l+1..l+j_span, exactly.
/// DomainError if 2 l_max > K or j_span < 1.
VerificationReport check_even_residual_sign(const CoeffTable& coeffs, int l_max = 10, int j_span = 40);

/// (-1)^{l+1} (r_{2l,2j+1} + r_{2l,2j+2}/2) > 0 over the same range.
VerificationReport check_combined_residual_sign(const CoeffTable& coeffs, int l_max = 10, int j_span = 40);

/// A value displayed as `digits` x 10^exponent, compared to half a unit in
/// its last displayed digit.
struct DisplayedValue {
  std::string digits;
  int exponent = 0;

  Rational value() const;
  Rational half_unit() const;
};

/// One exactly evaluated checkpoint against its displayed value.
struct CheckpointValue {
  int l = 0;
  Rational exact;
  DisplayedValue displayed;
  bool matches = false;
};

/// V_l = (2l+3)! d_{2l+4,2l+10} - (alpha_tilde_{2l+2}/alpha_tilde_{2l+4}) (2l+1)! d_{2l+2,2l+10}
/// for l = 0..3. DomainError if K < 12.
std::vector<CheckpointValue> gap_checkpoint_values(const CoeffTable& coeffs);

/// O_l + E_l at j = l+4 for l = 0..2.
std::vector<CheckpointValue> odd_even_checkpoint_values(const CoeffTable& coeffs);

/// Facets per l: "positive" (V_l > 0) and "displayed" (|V_l - shown| <= half unit).
VerificationReport check_gap_values(const CoeffTable& coeffs);

/// Facet "displayed": |O_l + E_l - shown| <= 5e-5, plus "positive".
VerificationReport check_odd_even_values(const CoeffTable& coeffs);

}  // namespace landau
