#include "landau/verifier.hpp"

#include <array>
#include <string>

#include "landau/error.hpp"
#include "parallel.hpp"

namespace landau {

ApproximantSpec::ApproximantSpec(int order, CoeffTable table) : l(order), coeffs(std::move(table)) {
  if (l < 0 || l > coeffs.K()) {
    throw Error(ErrorKind::DomainError,
                "truncation order " + std::to_string(l) + " needs 0 <= l <= K = " + std::to_string(coeffs.K()));
  }
}

namespace {

void check_n(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::DomainError, "n must be non-negative, got " + std::to_string(n));
}

Rational partial_sum_direct(const CoeffTable& coeffs, int l, std::int64_t n) {
  const Rational x(BigInt(1), BigInt(static_cast<long>(n + 1)));
  Rational power(1);
  Rational sum;
  for (int k = 1; k <= l; ++k) {
    power *= x;
    sum += coeffs.alpha(k) * power;
  }
  return sum;
}

Enclosure transcendental_direct(const Rational& gn, std::int64_t n, int bits) {
  Enclosure t = pi_gn_enclosure(gn, bits);
  t -= const_euler_gamma(bits);
  t -= const_ln(Rational(static_cast<long>(16 * (n + 1))), bits);
  return t;
}

}  // namespace

Rational approximant_rational_part(const ApproximantSpec& spec, std::int64_t n) {
  check_n(n);
  return partial_sum_direct(spec.coeffs, spec.l, n);
}

Enclosure approximant(const ApproximantSpec& spec, std::int64_t n, int precision_bits) {
  check_n(n);
  Enclosure a = const_ln(Rational(static_cast<long>(16 * (n + 1))), precision_bits);
  a += const_euler_gamma(precision_bits);
  a += partial_sum_direct(spec.coeffs, spec.l, n);
  return a;
}

Enclosure epsilon(const ApproximantSpec& spec, std::int64_t n, int precision_bits) {
  check_n(n);
  return transcendental_direct(gn_exact(n), n, precision_bits) - partial_sum_direct(spec.coeffs, spec.l, n);
}

Rational difference_middle(std::int64_t N) {
  if (N < 1) throw Error(ErrorKind::DomainError, "N must be positive");
  const Rational x(BigInt(1), BigInt(static_cast<long>(N)));
  return Rational(2) - x + x * x / Rational(4);
}

Rational difference_lower(std::int64_t N) {
  if (N < 1) throw Error(ErrorKind::DomainError, "N must be positive");
  const Rational t = Rational(1) - Rational(BigInt(1), BigInt(static_cast<long>(2 * N)));
  return t * t;
}

Enclosure residual(const ApproximantSpec& spec, std::int64_t n, int precision_bits) {
  if (n < 1) throw Error(ErrorKind::DomainError, "residual needs n >= 1, got " + std::to_string(n));
  const std::int64_t N = n + 1;
  return epsilon(spec, n + 1, precision_bits) - epsilon(spec, n, precision_bits) * difference_middle(N) +
         epsilon(spec, n - 1, precision_bits) * difference_lower(N);
}

ErrorTermEvaluator::ErrorTermEvaluator(CoeffTable coeffs, std::int64_t n_max)
    : coeffs_(std::move(coeffs)), landau_(LandauTable::build(n_max)) {}

const Enclosure& ErrorTermEvaluator::transcendental_part(std::int64_t n, int precision_bits) {
  const auto key = std::make_pair(n, precision_bits);
  auto it = transcendental_.find(key);
  if (it == transcendental_.end()) {
    it = transcendental_.emplace(key, transcendental_direct(landau_[n], n, precision_bits)).first;
  }
  return it->second;
}

const Rational& ErrorTermEvaluator::partial_sum(std::int64_t n, int l) {
  check_n(n);
  if (l < 0 || l > coeffs_.K()) throw Error(ErrorKind::DomainError, "truncation order outside table");
  auto& sums = partial_sums_[n];
  if (sums.empty()) sums.emplace_back(0);
  if (static_cast<int>(sums.size()) <= l) {
    const Rational x(BigInt(1), BigInt(static_cast<long>(n + 1)));
    Rational power = x.pow(static_cast<long>(sums.size()));
    while (static_cast<int>(sums.size()) <= l) {
      const int k = static_cast<int>(sums.size());
      sums.push_back(sums.back() + coeffs_.alpha(k) * power);
      power *= x;
    }
  }
  return sums[static_cast<std::size_t>(l)];
}

Enclosure ErrorTermEvaluator::epsilon(std::int64_t n, int l, int precision_bits) {
  return transcendental_part(n, precision_bits) - partial_sum(n, l);
}

Enclosure ErrorTermEvaluator::approximant(std::int64_t n, int l, int precision_bits) {
  Enclosure a = const_ln(Rational(static_cast<long>(16 * (n + 1))), precision_bits);
  a += const_euler_gamma(precision_bits);
  a += partial_sum(n, l);
  return a;
}

Enclosure ErrorTermEvaluator::residual(std::int64_t n, int l, int precision_bits) {
  if (n < 1) throw Error(ErrorKind::DomainError, "residual needs n >= 1, got " + std::to_string(n));
  const std::int64_t N = n + 1;
  return epsilon(n + 1, l, precision_bits) - epsilon(n, l, precision_bits) * difference_middle(N) +
         epsilon(n - 1, l, precision_bits) * difference_lower(N);
}

Verdict expected_error_sign(int l) noexcept {
  const long half = static_cast<long>(l) * (l + 1) / 2;
  return half % 2 == 0 ? Verdict::ProvenNegative : Verdict::ProvenPositive;
}

namespace {

// Runs per_n(evaluator, n, out) for each n in [n_lo, n_hi] and concatenates
// the per-n point lists in increasing n.
template <class PerN>
void sweep_over_n(VerificationReport& report, const CoeffTable& coeffs, std::int64_t n_lo, std::int64_t n_hi,
                  std::int64_t table_n_max, unsigned threads, PerN per_n) {
  if (n_hi < n_lo) return;
  const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<std::vector<PointResult>> slots(count);
  detail::parallel_for(
      count, threads, [&] { return ErrorTermEvaluator(coeffs, table_n_max); },
      [&](ErrorTermEvaluator& evaluator, std::size_t i) {
        per_n(evaluator, n_lo + static_cast<std::int64_t>(i), slots[i]);
      });
  for (auto& slot : slots) {
    for (auto& p : slot) report.add(std::move(p));
  }
}

PointResult adaptive_point(std::string facet, std::int64_t first, std::int64_t second, Verdict expected,
                           const Certificate& cert) {
  PointResult p;
  p.facet = std::move(facet);
  p.first = first;
  p.second = second;
  p.expected = expected;
  p.observed = cert.verdict;
  p.precision_bits = cert.precision_bits;
  return p;
}

void check_precision(const PrecisionPolicy& policy) {
  if (policy.ceiling_bits < 16 || policy.start_bits < 16) {
    throw Error(ErrorKind::InvalidArgument, "precision policy needs at least 16 bits");
  }
}

}  // namespace

VerificationReport check_error_sign_pattern(const CoeffTable& coeffs, std::int64_t n_max, int l_max,
                                            const SweepOptions& options) {
  check_n(n_max);
  check_precision(options.precision);
  if (l_max < 0 || l_max > coeffs.K()) throw Error(ErrorKind::DomainError, "l_max exceeds coefficient table");
  VerificationReport report("error-sign-pattern", {"n", 0, n_max, "l", 0, l_max, options.precision.ceiling_bits});
  sweep_over_n(report, coeffs, 0, n_max, n_max, options.threads,
               [&](ErrorTermEvaluator& ev, std::int64_t n, std::vector<PointResult>& out) {
                 for (int l = 0; l <= l_max; ++l) {
                   const auto cert = certify_adaptive([&](int bits) { return ev.epsilon(n, l, bits); },
                                                      options.precision);
                   out.push_back(adaptive_point("epsilon", n, l, expected_error_sign(l), cert));
                 }
               });
  return report;
}

void validate_bound_orders(const BoundOrders& orders) {
  const bool p_ok = orders.p >= 0 && (orders.p % 4 == 1 || orders.p % 4 == 2);
  const bool q_ok = orders.q >= 0 && (orders.q % 4 == 0 || orders.q % 4 == 3);
  if (!p_ok || !q_ok) {
    throw Error(ErrorKind::InvalidOrderClass, "(p, q) = (" + std::to_string(orders.p) + ", " +
                                                  std::to_string(orders.q) +
                                                  ") needs p = 1,2 mod 4 and q = 0,3 mod 4");
  }
}

VerificationReport check_sharp_bounds(const CoeffTable& coeffs, std::int64_t n_max,
                                      const std::vector<BoundOrders>& orders, const SweepOptions& options) {
  check_n(n_max);
  check_precision(options.precision);
  int max_order = 0;
  for (const auto& o : orders) {
    validate_bound_orders(o);
    max_order = std::max({max_order, o.p, o.q});
  }
  if (max_order > coeffs.K()) throw Error(ErrorKind::DomainError, "bound order exceeds coefficient table");
  VerificationReport report("sharp-bounds", {"n", 0, n_max, "order", 0, max_order, options.precision.ceiling_bits});
  sweep_over_n(report, coeffs, 0, n_max, n_max, options.threads,
               [&](ErrorTermEvaluator& ev, std::int64_t n, std::vector<PointResult>& out) {
                 for (const auto& o : orders) {
                   // A_p < pi G_n  <=>  eps_p > 0;  pi G_n < A_q  <=>  eps_q < 0.
                   const auto lower = certify_adaptive([&](int bits) { return ev.epsilon(n, o.p, bits); },
                                                       options.precision);
                   out.push_back(adaptive_point("lower", n, o.p, Verdict::ProvenPositive, lower));
                   const auto upper = certify_adaptive([&](int bits) { return ev.epsilon(n, o.q, bits); },
                                                       options.precision);
                   out.push_back(adaptive_point("upper", n, o.q, Verdict::ProvenNegative, upper));
                 }
               });
  return report;
}

VerificationReport check_residual_sign(const CoeffTable& coeffs, std::int64_t n_max, int l_max,
                                       const SweepOptions& options) {
  if (n_max < 1) throw Error(ErrorKind::DomainError, "residual sweep starts at n = 1");
  check_precision(options.precision);
  if (l_max < 0 || 2 * l_max > coeffs.K()) throw Error(ErrorKind::DomainError, "2 l_max exceeds coefficient table");
  VerificationReport report("residual-sign", {"n", 1, n_max, "l", 0, l_max, options.precision.ceiling_bits});
  sweep_over_n(report, coeffs, 1, n_max, n_max + 1, options.threads,
               [&](ErrorTermEvaluator& ev, std::int64_t n, std::vector<PointResult>& out) {
                 for (int l = 0; l <= l_max; ++l) {
                   // (-1)^{l+1} R_{2l} > 0
                   const Verdict expected = l % 2 == 1 ? Verdict::ProvenPositive : Verdict::ProvenNegative;
                   const auto cert = certify_adaptive([&](int bits) { return ev.residual(n, 2 * l, bits); },
                                                      options.precision);
                   out.push_back(adaptive_point("residual", n, l, expected, cert));
                 }
               });
  return report;
}

VerificationReport check_coefficient_bounds(const DerivedCoeffs& derived, int k_max, const PrecisionPolicy& precision) {
  if (k_max < 9) throw Error(ErrorKind::DomainError, "coefficient bounds hold from k = 9; k_max < 9");
  if (2 * k_max + 1 > derived.K()) throw Error(ErrorKind::DomainError, "coefficient table too short for k_max");
  check_precision(precision);
  const Rational even_low = Rational::parse("1.9621");
  const Rational even_high = Rational::parse("2.2032");
  const Rational odd_low = Rational::parse("0.6551");
  const Rational odd_high = Rational::parse("2.2048");

  VerificationReport report("coefficient-bounds", {"k", 9, k_max, "", 0, -1, precision.ceiling_bits});
  for (int k = 9; k <= k_max; ++k) {
    const Rational& even = derived.alpha_tilde(2 * k);
    const Rational& odd = derived.alpha_tilde(2 * k + 1);

    // c / ((2k-1) (2pi)^{2k})
    auto even_bound = [k](const Rational& c, int bits) {
      const Enclosure two_pi = const_pi(bits) * Rational(2);
      return Enclosure(c / Rational(2 * k - 1), bits) / two_pi.pow(static_cast<unsigned long>(2 * k));
    };
    // (4 ln(2k+1) + c) / (pi (2pi)^{2k+1})
    auto odd_bound = [k](const Rational& c, int bits) {
      const Enclosure pi = const_pi(bits);
      const Enclosure two_pi = pi * Rational(2);
      Enclosure top = const_ln(Rational(2 * k + 1), bits) * Rational(4) + c;
      return top / (pi * two_pi.pow(static_cast<unsigned long>(2 * k + 1)));
    };

    const auto facets = std::array{
        std::make_pair("even_lower",
                       certify_adaptive([&](int b) { return Enclosure(even, b) - even_bound(even_low, b); }, precision)),
        std::make_pair("even_upper",
                       certify_adaptive([&](int b) { return even_bound(even_high, b) - Enclosure(even, b); }, precision)),
        std::make_pair("odd_lower",
                       certify_adaptive([&](int b) { return Enclosure(odd, b) - odd_bound(odd_low, b); }, precision)),
        std::make_pair("odd_upper",
                       certify_adaptive([&](int b) { return odd_bound(odd_high, b) - Enclosure(odd, b); }, precision)),
    };
    for (const auto& [facet, cert] : facets) {
      report.add(adaptive_point(facet, k, -1, Verdict::ProvenPositive, cert));
    }
  }
  return report;
}

std::string_view to_string(CellStatus s) noexcept {
  switch (s) {
    case CellStatus::Match: return "match";
    case CellStatus::Warn: return "warn";
    case CellStatus::Mismatch: return "mismatch";
  }
  return "mismatch";
}

namespace {

// Published ratio table, k = 1..9 per row.
constexpr std::array<std::array<const char*, 9>, 4> kPublishedRatios{{
    {"56.305", "60.184", "57.345", "53.150", "49.797", "47.533", "46.044", "45.031", "44.303"},
    {"21.333", "30.720", "34.632", "36.358", "37.227", "37.730", "38.055", "38.282", "38.450"},
    {"0.1041", "0.1184", "0.1007", "0.0851", "0.0749", "0.0684", "0.0642", "0.0612", "0.0590"},
    {"2.2222", "3.6373", "3.4884", "3.0964", "2.7884", "2.5822", "2.4432", "2.3438", "2.2681"},
}};

// alpha_tilde_{2k+1} / alpha_tilde_{2k+3}, k = 9..13.
constexpr std::array<const char*, 5> kPublishedOddTail{"38.578", "38.679", "38.762", "38.829", "38.886"};

RatioCell make_cell(std::string row, int k, Rational exact, std::string published) {
  RatioCell cell;
  cell.row = std::move(row);
  cell.k = k;
  cell.exact = std::move(exact);
  cell.published = std::move(published);
  const auto dot = cell.published.find('.');
  cell.decimals = dot == std::string::npos ? 0 : static_cast<int>(cell.published.size() - dot - 1);
  cell.rounded = to_fixed(cell.exact, cell.decimals, DecimalRounding::HalfEven);
  cell.truncated = to_fixed(cell.exact, cell.decimals, DecimalRounding::Truncate);

  const Rational shown = Rational::parse(cell.published);
  const Rational unit = Rational(10).pow(-cell.decimals);
  const Rational rounded = round_decimal(cell.exact, cell.decimals, DecimalRounding::HalfEven);
  cell.within_one_unit = (cell.exact - shown).abs() <= unit;
  if (rounded == shown) {
    cell.status = CellStatus::Match;
  } else if ((rounded - shown).abs() <= unit) {
    cell.status = CellStatus::Warn;
  } else {
    cell.status = CellStatus::Mismatch;
  }
  return cell;
}

PointResult exact_point(std::string facet, std::int64_t k, const Rational& margin) {
  PointResult p;
  p.facet = std::move(facet);
  p.first = k;
  p.expected = Verdict::ProvenPositive;
  p.observed = sign_verdict(margin.sign());
  return p;
}

}  // namespace

RatioCheck check_coefficient_ratios(const DerivedCoeffs& derived, int k_max) {
  if (k_max < 13) throw Error(ErrorKind::DomainError, "ratio check needs k_max >= 13");
  if (2 * k_max + 3 > derived.K()) throw Error(ErrorKind::DomainError, "coefficient table too short for k_max");
  auto at = [&](int i) -> const Rational& { return derived.alpha_tilde(i); };

  RatioCheck out{VerificationReport("coefficient-ratios", {"k", 0, k_max, "", 0, -1, 0}), {}, {}};
  const Rational even_even_bound(BigInt(254), BigInt(5));
  const Rational odd_odd_bound(43);
  const Rational lower_bound = Rational::parse("0.12");
  const Rational upper_bound = Rational::parse("3.7");
  for (int k = 0; k <= k_max; ++k) {
    if (k >= 5) out.bounds.add(exact_point("even_even", k, even_even_bound - at(2 * k) / at(2 * k + 2)));
    out.bounds.add(exact_point("odd_odd", k, odd_odd_bound - at(2 * k + 1) / at(2 * k + 3)));
    const Rational weight(2 * k + 1);
    out.bounds.add(exact_point("even_odd_lower", k, lower_bound - weight * at(2 * k + 2) / at(2 * k + 1)));
    out.bounds.add(exact_point("even_odd_upper", k, upper_bound - weight * at(2 * k + 2) / at(2 * k + 3)));
  }

  for (int row = 0; row < 4; ++row) {
    for (int k = 1; k <= 9; ++k) {
      const Rational weight(2 * k - 1);
      Rational value;
      switch (row) {
        case 0: value = at(2 * k) / at(2 * k + 2); break;
        case 1: value = at(2 * k - 1) / at(2 * k + 1); break;
        case 2: value = weight * at(2 * k) / at(2 * k - 1); break;
        default: value = weight * at(2 * k) / at(2 * k + 1); break;
      }
      out.table.push_back(make_cell(kRatioRows[row], k, std::move(value),
                                    kPublishedRatios[static_cast<std::size_t>(row)][static_cast<std::size_t>(k - 1)]));
    }
  }
  for (int k = 9; k <= 13; ++k) {
    out.extended_odd.push_back(make_cell("odd_odd", k, at(2 * k + 1) / at(2 * k + 3),
                                         kPublishedOddTail[static_cast<std::size_t>(k - 9)]));
  }
  return out;
}

}  // namespace landau
