#include "landau/proof_harness.hpp"

#include <array>
#include <string>

#include "landau/error.hpp"

namespace landau {

namespace {

Rational signed_unit(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

// alpha_k with the bookkeeping value alpha_0 = -1 used by the even split.
Rational alpha_or_minus_one(const CoeffTable& coeffs, int k) { return k == 0 ? Rational(-1) : coeffs.alpha(k); }

Rational alpha_tilde(const CoeffTable& coeffs, int k) {
  return signed_unit(k / 2 + 1) * coeffs.alpha(k) / Rational(factorial(static_cast<unsigned long>(k - 1)));
}

Rational fact(int n) { return Rational(factorial(static_cast<unsigned long>(n))); }

void require_split_range(int l, int j, const CoeffTable& coeffs) {
  if (l < 0 || j < l || 2 * l > coeffs.K()) {
    throw Error(ErrorKind::DomainError, "(l, j) = (" + std::to_string(l) + ", " + std::to_string(j) +
                                            ") needs 0 <= l <= j and 2l <= K");
  }
}

void require_sweep(const CoeffTable& coeffs, int l_max, int j_span) {
  if (l_max < 0 || 2 * l_max > coeffs.K()) throw Error(ErrorKind::DomainError, "2 l_max exceeds coefficient table");
  if (j_span < 1) throw Error(ErrorKind::DomainError, "j_span must be positive");
}

PointResult exact_point(std::string facet, int first, int second, const Rational& margin) {
  PointResult p;
  p.facet = std::move(facet);
  p.first = first;
  p.second = second;
  p.expected = Verdict::ProvenPositive;
  p.observed = sign_verdict(margin.sign());
  return p;
}

}  // namespace

Rational r_coeff(int l, int s, const CoeffTable& coeffs) {
  if (l < 0 || s < l + 3 || l > coeffs.K()) {
    throw Error(ErrorKind::DomainError, "r_{" + std::to_string(l) + "," + std::to_string(s) +
                                            "} needs s >= l+3 and l <= K");
  }
  Rational sum = -d_coeff(0, s);
  for (int k = 1; k <= l; ++k) sum += d_coeff(k, s) * coeffs.alpha(k);
  return -sum;
}

Rational r_even_sum(int l, int j, const CoeffTable& coeffs) {
  require_split_range(l, j, coeffs);
  Rational sum;
  for (int k = 0; k <= l; ++k) sum += d_coeff(2 * k, 2 * j + 2) * alpha_or_minus_one(coeffs, 2 * k);
  return signed_unit(l + 1) * sum;
}

Rational r_odd_sum(int l, int j, const CoeffTable& coeffs) {
  require_split_range(l, j, coeffs);
  Rational sum;
  for (int k = 0; k < l; ++k) sum += d_coeff(2 * k + 1, 2 * j + 2) * coeffs.alpha(2 * k + 1);
  return signed_unit(l + 1) * sum;
}

ProofCheckRecord compute_odd_even_terms(const CoeffTable& coeffs, int l, int j) {
  if (l < 0 || coeffs.K() < 2 * l + 4 || j < l + 4) {
    throw Error(ErrorKind::DomainError, "(l, j) = (" + std::to_string(l) + ", " + std::to_string(j) +
                                            ") needs K >= 2l+4 and j >= l+4");
  }
  const Rational half(BigInt(1), BigInt(2));
  auto pair_term = [&](int k) {
    return coeffs.alpha(k) * (d_coeff(k, 2 * j + 1) + half * d_coeff(k, 2 * j + 2));
  };
  ProofCheckRecord rec;
  rec.l = l;
  rec.j = j;
  rec.r_even_sum = r_even_sum(l, j, coeffs);
  rec.r_odd_sum = r_odd_sum(l, j, coeffs);
  rec.o_term = signed_unit(l) * (pair_term(2 * l + 3) + pair_term(2 * l + 1));
  rec.e_term = signed_unit(l) * (pair_term(2 * l + 4) + pair_term(2 * l + 2));
  return rec;
}

VerificationReport check_even_residual_sign(const CoeffTable& coeffs, int l_max, int j_span) {
  require_sweep(coeffs, l_max, j_span);
  VerificationReport report("even-residual-sign", {"l", 0, l_max, "j", 1, l_max + j_span, 0});
  for (int l = 0; l <= l_max; ++l) {
    for (int j = l + 1; j <= l + j_span; ++j) {
      report.add(exact_point("even", l, j, signed_unit(l) * r_coeff(2 * l, 2 * j + 2, coeffs)));
    }
  }
  return report;
}

VerificationReport check_combined_residual_sign(const CoeffTable& coeffs, int l_max, int j_span) {
  require_sweep(coeffs, l_max, j_span);
  const Rational half(BigInt(1), BigInt(2));
  VerificationReport report("combined-residual-sign", {"l", 0, l_max, "j", 1, l_max + j_span, 0});
  for (int l = 0; l <= l_max; ++l) {
    for (int j = l + 1; j <= l + j_span; ++j) {
      const Rational combined = r_coeff(2 * l, 2 * j + 1, coeffs) + half * r_coeff(2 * l, 2 * j + 2, coeffs);
      report.add(exact_point("combined", l, j, signed_unit(l + 1) * combined));
    }
  }
  return report;
}

Rational DisplayedValue::value() const { return Rational::parse(digits) * Rational(10).pow(exponent); }

Rational DisplayedValue::half_unit() const {
  const auto dot = digits.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(digits.size() - dot - 1);
  return Rational(BigInt(1), BigInt(2)) * Rational(10).pow(exponent - decimals);
}

namespace {

bool displayed_match(const Rational& exact, const DisplayedValue& shown) {
  return (exact - shown.value()).abs() <= shown.half_unit();
}

}  // namespace

std::vector<CheckpointValue> gap_checkpoint_values(const CoeffTable& coeffs) {
  if (coeffs.K() < 12) throw Error(ErrorKind::DomainError, "checkpoint values need K >= 12");
  const std::array<DisplayedValue, 4> shown{{{"62.9", 0}, {"1004.5", 0}, {"0.66", 6}, {"0.33", 9}}};
  std::vector<CheckpointValue> out;
  for (int l = 0; l <= 3; ++l) {
    const int s = 2 * l + 10;
    const Rational ratio = alpha_tilde(coeffs, 2 * l + 2) / alpha_tilde(coeffs, 2 * l + 4);
    CheckpointValue v;
    v.l = l;
    v.exact = fact(2 * l + 3) * d_coeff(2 * l + 4, s) - ratio * fact(2 * l + 1) * d_coeff(2 * l + 2, s);
    v.displayed = shown[static_cast<std::size_t>(l)];
    v.matches = displayed_match(v.exact, v.displayed);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CheckpointValue> odd_even_checkpoint_values(const CoeffTable& coeffs) {
  const std::array<const char*, 3> shown{"3.3236", "1.9908", "4.3827"};
  const Rational tolerance = Rational::parse("5e-5");
  std::vector<CheckpointValue> out;
  for (int l = 0; l <= 2; ++l) {
    const ProofCheckRecord rec = compute_odd_even_terms(coeffs, l, l + 4);
    CheckpointValue v;
    v.l = l;
    v.exact = rec.o_term + rec.e_term;
    v.displayed = {shown[static_cast<std::size_t>(l)], 0};
    v.matches = (v.exact - v.displayed.value()).abs() <= tolerance;
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

VerificationReport checkpoint_report(std::string claim, const std::vector<CheckpointValue>& values) {
  VerificationReport report(std::move(claim), {"l", 0, static_cast<std::int64_t>(values.size()) - 1, "", 0, -1, 0});
  for (const auto& v : values) {
    report.add(exact_point("positive", v.l, -1, v.exact));
    report.add(exact_point("displayed", v.l, -1, v.matches ? Rational(1) : Rational(-1)));
  }
  return report;
}

}  // namespace

VerificationReport check_gap_values(const CoeffTable& coeffs) {
  return checkpoint_report("gap-values", gap_checkpoint_values(coeffs));
}

VerificationReport check_odd_even_values(const CoeffTable& coeffs) {
  return checkpoint_report("odd-even-values", odd_even_checkpoint_values(coeffs));
}

}  // namespace landau
