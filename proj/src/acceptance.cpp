#include "landau/acceptance.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <sstream>

#include "landau/coefficients.hpp"
#include "landau/generating.hpp"
#include "landau/landau_constants.hpp"
#include "landau/proof_harness.hpp"
#include "landau/verifier.hpp"

namespace landau {

namespace {

struct CheckOutcome {
  bool passed = false;
  std::string detail;
  bool documented_discrepancy = false;
};

std::string summarize(const VerificationReport& report) {
  const auto s = report.summary();
  std::ostringstream os;
  os << s.points << " points, " << s.counterexamples.size() << " counterexamples, " << s.inconclusive.size()
     << " inconclusive, max " << s.max_precision_bits << " bits";
  return os.str();
}

// Failing points of `report` whose facet is not in `documented`.
std::size_t undocumented_failures(const VerificationReport& report, std::initializer_list<std::string_view> documented) {
  std::size_t count = 0;
  for (const auto& p : report.points()) {
    if (p.outcome() == landau::Outcome::Proven) continue;
    bool known = false;
    for (auto facet : documented) known = known || p.facet == facet;
    if (!known) ++count;
  }
  return count;
}

const std::vector<Rational>& published_alphas() {
  static const std::vector<Rational> values = [] {
    std::vector<Rational> v;
    for (const char* text : {"-1/4", "5/192", "3/128", "-341/122880", "-75/8192", "7615/8257536", "2079/262144",
                             "-679901/1006632960", "-409875/33554432", "16210165/17716740096",
                             "31709469/1073741824", "-568756771963/281406257233920"}) {
      v.push_back(Rational::parse(text));
    }
    return v;
  }();
  return values;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const SweepOptions sweep{options.precision, options.threads};
  // Largest index any criterion reads: alpha_200 for the sign pattern.
  auto with_overrides = [&](CoeffTable t) {
    for (const auto& [k, value] : options.alpha_overrides) t = t.with_override(k, value);
    return t;
  };
  const CoeffTable coeffs = with_overrides(alpha_table(200));
  const DerivedCoeffs derived = beta_from_alpha(coeffs);

  std::vector<CriterionResult> results;
  auto run = [&](int id, std::string title, std::optional<double> limit, const std::function<CheckOutcome()>& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.time_limit_seconds = limit;
    const auto start = std::chrono::steady_clock::now();
    CheckOutcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what(), false};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.passed;
    r.detail = std::move(o.detail);
    r.documented_discrepancy = !o.passed && o.documented_discrepancy;
    if (limit && r.seconds >= *limit) {
      r.passed = false;
      r.documented_discrepancy = false;
      r.detail += "; over time limit";
    }
    results.push_back(std::move(r));
  };

  run(1, "alpha_1..alpha_12 equal the published rationals", 1.0, [&] {
    CoeffTable t = alpha_table(12);
    for (const auto& [k, value] : options.alpha_overrides) {
      if (k <= t.K()) t = t.with_override(k, value);
    }
    const auto& expected = published_alphas();
    int wrong = 0;
    for (int k = 1; k <= 12; ++k) wrong += t.alpha(k) != expected[static_cast<std::size_t>(k - 1)];
    return CheckOutcome{wrong == 0, std::to_string(12 - wrong) + "/12 exact", false};
  });

  run(2, "recurrence and generating-function coefficients agree to order 80", 30.0, [&] {
    const GeneratingAlphas g = alpha_from_generating(80);
    int compared = 0, wrong = 0;
    for (std::size_t k = 1; k < g.even.size(); ++k, ++compared) {
      wrong += derived.alpha_tilde(static_cast<int>(2 * k)) != g.even[k];
    }
    for (std::size_t k = 0; k < g.odd.size(); ++k, ++compared) {
      wrong += derived.alpha_tilde(static_cast<int>(2 * k + 1)) != g.odd[k];
    }
    return CheckOutcome{wrong == 0 && compared == 81,
                   std::to_string(compared - wrong) + "/" + std::to_string(compared) + " indices equal", false};
  });

  run(3, "(-1)^{l(l+1)/2} alpha_{l+1} < 0 for l = 0..199", std::nullopt, [&] {
    int wrong = 0;
    for (int l = 0; l <= 199; ++l) {
      const long half = static_cast<long>(l) * (l + 1) / 2;
      const int sign = (half % 2 == 0 ? 1 : -1) * coeffs.alpha(l + 1).sign();
      wrong += sign >= 0;
    }
    return CheckOutcome{wrong == 0, std::to_string(200 - wrong) + "/200 signs", false};
  });

  run(4, "error sign pattern for n = 0..500, l = 0..30", 300.0, [&] {
    const auto report = check_error_sign_pattern(coeffs, 500, 30, sweep);
    return CheckOutcome{report.all_proven(), summarize(report), false};
  });

  run(5, "sharp two-sided bounds for six order pairs, n = 0..500", std::nullopt, [&] {
    const std::vector<BoundOrders> pairs{{1, 0}, {2, 3}, {5, 4}, {5, 7}, {9, 11}, {13, 12}};
    const auto report = check_sharp_bounds(coeffs, 500, pairs, sweep);
    return CheckOutcome{report.all_proven(), summarize(report), false};
  });

  run(6, "(-1)^{l+1} R_{2l} > 0 for n = 1..300, l = 0..15", std::nullopt, [&] {
    const auto report = check_residual_sign(coeffs, 300, 15, sweep);
    return CheckOutcome{report.all_proven(), summarize(report), false};
  });

  run(7, "coefficient bounds for k = 9..60", std::nullopt, [&] {
    const auto report = check_coefficient_bounds(derived, 60, options.precision);
    std::string detail = summarize(report);
    std::size_t odd_upper = 0;
    for (const auto& p : report.summary().counterexamples) odd_upper += p.facet == "odd_upper";
    if (odd_upper > 0) detail += "; odd_upper refuted at " + std::to_string(odd_upper) + " k";
    return CheckOutcome{report.all_proven(), detail, undocumented_failures(report, {"odd_upper"}) == 0};
  });

  run(8, "ratio bounds to k = 60 and the published ratio table", std::nullopt, [&] {
    const RatioCheck rc = check_coefficient_ratios(derived, 60);
    int cells = 0, within = 0, warn = 0;
    for (const auto* list : {&rc.table, &rc.extended_odd}) {
      for (const auto& c : *list) {
        ++cells;
        within += c.within_one_unit;
        warn += c.status == CellStatus::Warn;
      }
    }
    std::ostringstream os;
    os << summarize(rc.bounds) << "; " << within << "/" << cells << " displayed values within one unit (" << warn
       << " differ in the last digit)";
    return CheckOutcome{rc.bounds.all_proven() && within == cells && cells == 41, os.str(), false};
  });

  run(9, "checkpoint values and exact residual coefficient signs", std::nullopt, [&] {
    const auto gaps = check_gap_values(coeffs);
    const auto odd_even = check_odd_even_values(coeffs);
    const auto even_sign = check_even_residual_sign(coeffs, 10, 40);
    const auto combined_sign = check_combined_residual_sign(coeffs, 10, 40);
    const Rational half(BigInt(1), BigInt(2));
    const bool eleven = -r_coeff(0, 5, coeffs) - half * r_coeff(0, 6, coeffs) == Rational(BigInt(11), BigInt(160));
    bool three = true;
    for (int j = 3; j <= 40; ++j) three = three && r_odd_sum(1, j, coeffs) == Rational(BigInt(3), BigInt(16));

    std::ostringstream os;
    os << "gap values " << (gaps.all_proven() ? "ok" : "FAILED");
    os << "; O+E ";
    for (const auto& v : odd_even_checkpoint_values(coeffs)) {
      os << to_fixed(v.exact, 4, DecimalRounding::HalfEven) << (v.matches ? " " : " (shown " + v.displayed.digits + ") ");
    }
    os << "; even/combined signs " << (even_sign.all_proven() && combined_sign.all_proven() ? "ok" : "FAILED");
    os << "; 11/160 " << (eleven ? "ok" : "FAILED") << "; 3/16 " << (three ? "ok" : "FAILED");

    const bool others = gaps.all_proven() && even_sign.all_proven() && combined_sign.all_proven() && eleven && three;
    const bool only_displayed = undocumented_failures(odd_even, {"displayed"}) == 0;
    return CheckOutcome{others && odd_even.all_proven(), os.str(), others && only_displayed};
  });

  run(10, "beta vanishes at odd indices, alternates at even, rho_1 = beta_2", std::nullopt, [&] {
    int bad = 0;
    for (int j = 1; j <= 80; j += 2) bad += !derived.beta(j).is_zero();
    for (int s = 1; 2 * s <= 80; ++s) bad += (s % 2 == 1 ? 1 : -1) * derived.beta(2 * s).sign() <= 0;
    const PowerSeries u = u_series(4);
    const bool cross = u.coeff(2) == derived.beta(2) && derived.rho(1) == derived.beta(2);
    return CheckOutcome{bad == 0 && cross,
                   std::to_string(bad) + " failures; rho_1 = " + u.coeff(2).to_string() + ", beta_2 = " +
                       derived.beta(2).to_string(),
                   false};
  });

  run(11, "G_n from F(x)/(1-x) to n = 60 and the quadratic transformation at order 60", std::nullopt, [&] {
    const PowerSeries g = landau_generating_series(60);
    int bad = 0;
    for (int n = 0; n <= 60; ++n) bad += g.coeff(n) != gn_exact(n);
    const auto qt = quadratic_transform_report(60);
    const bool ok = bad == 0 && qt.identity_holds && qt.even_factors_nonnegative && qt.odd_factor_nonnegative;
    return CheckOutcome{ok,
                   std::to_string(61 - bad) + "/61 G_n equal; transform " + (qt.identity_holds ? "holds" : "fails") +
                       ", factors " +
                       (qt.even_factors_nonnegative && qt.odd_factor_nonnegative ? "nonnegative" : "NEGATIVE"),
                   false};
  });

  run(12, "asymptotic deviations shrink on k = 10, 20, 40, 80", std::nullopt, [&] {
    const std::array<int, 4> ks{10, 20, 40, 80};
    std::vector<AsymptoticDeviation> dev;
    for (int k : ks) dev.push_back(coefficient_asymptotic_deviation(derived, k));
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < dev.size(); ++i) {
      decreasing = decreasing && certify_sign(dev[i].even - dev[i + 1].even) == Verdict::ProvenPositive;
    }
    const bool odd_small = certify_sign(Enclosure(Rational(BigInt(1), BigInt(2)), 256) - dev.back().odd) ==
                           Verdict::ProvenPositive;
    std::ostringstream os;
    os << "even";
    for (const auto& d : dev) os << " " << d.even.midpoint_string(4);
    os << "; odd at 80 " << dev.back().odd.midpoint_string(4);
    return CheckOutcome{decreasing && odd_small, os.str(), false};
  });

  return results;
}

}  // namespace landau
