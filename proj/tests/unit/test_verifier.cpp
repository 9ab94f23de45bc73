#include "landau/verifier.hpp"

#include <cmath>
#include <string>

#include "landau/generating.hpp"
#include "support.hpp"

using landau::BigInt;
using landau::CoeffTable;
using landau::Enclosure;
using landau::ErrorKind;
using landau::Outcome;
using landau::Rational;
using landau::Verdict;

namespace {

const CoeffTable& table() {
  static const CoeffTable t = landau::alpha_table(60);
  return t;
}

struct OracleEpsilon {
  long n;
  int l;
  const char* value;
};

// eps_l(n+1) from an independent 400-digit summation of G_n.
const OracleEpsilon kOracle[] = {
    {0, 0, "-0.208211733551520859812797192636"},
    {1, 1, "0.00903924928598214038563153172609"},
    {10, 5, "9.19328143862563407220600668831e-10"},
    {100, 10, "2.644299818536849215708629948e-24"},
    {500, 30, "6.06250690226571793582954711804e-76"},
    {3, 12, "-0.00000000118312880312234315849188144712"},
    {40, 20, "-3.25990214499727252947462095932e-32"},
};

bool close_relative(const Enclosure& e, const Rational& want, const Rational& rel) {
  const Enclosure gap = (e - want).abs();
  return landau::certify_sign(Enclosure(want.abs() * rel, e.precision_bits()) - gap) == Verdict::ProvenPositive;
}

std::size_t count_facet(const landau::ReportSummary& s, const std::string& facet) {
  std::size_t c = 0;
  for (const auto& p : s.counterexamples) c += p.facet == facet;
  return c;
}

}  // namespace

TEST_CASE("error terms agree with independently summed values") {
  const Rational rel = Rational::parse("1e-25");
  landau::ErrorTermEvaluator eval(table(), 500);
  for (const auto& o : kOracle) {
    CAPTURE(o.n);
    CAPTURE(o.l);
    const Rational want = Rational::parse(o.value);
    const landau::ApproximantSpec spec(o.l, table());
    CHECK(close_relative(landau::epsilon(spec, o.n, 400), want, rel));
    CHECK(close_relative(eval.epsilon(o.n, o.l, 400), want, rel));
  }
}

TEST_CASE("evaluator agrees with the direct functions") {
  landau::ErrorTermEvaluator eval(table(), 80);
  landau::testing::Generator gen;
  for (int i = 0; i < 40; ++i) {
    const long n = gen.integer(1, 79);
    const int l = static_cast<int>(gen.integer(0, 20));
    const landau::ApproximantSpec spec(l, table());
    CAPTURE(n);
    CAPTURE(l);
    CHECK(eval.partial_sum(n, l) == landau::approximant_rational_part(spec, n));
    CHECK(eval.epsilon(n, l, 256).intersects(landau::epsilon(spec, n, 256)));
    CHECK(eval.approximant(n, l, 256).intersects(landau::approximant(spec, n, 256)));
    CHECK(eval.residual(n, l, 256).intersects(landau::residual(spec, n, 256)));
    // A_l + eps_l = pi G_n.
    CHECK((landau::approximant(spec, n, 256) + landau::epsilon(spec, n, 256))
              .intersects(landau::pi_gn_enclosure(n, 256)));
  }
}

TEST_CASE("difference equation multipliers annihilate pi G_n") {
  for (long n = 1; n <= 30; ++n) {
    const long N = n + 1;
    const Rational w_next = landau::gn_exact(n + 1), w = landau::gn_exact(n), w_prev = landau::gn_exact(n - 1);
    CHECK(w_next - landau::difference_middle(N) * w + landau::difference_lower(N) * w_prev == Rational(0));
  }
  CHECK(landau::difference_middle(2) == Rational(BigInt(25), BigInt(16)));
  CHECK(landau::difference_lower(2) == Rational(BigInt(9), BigInt(16)));
}

TEST_CASE("expected sign cycles with period four") {
  CHECK(landau::expected_error_sign(0) == Verdict::ProvenNegative);
  CHECK(landau::expected_error_sign(1) == Verdict::ProvenPositive);
  CHECK(landau::expected_error_sign(2) == Verdict::ProvenPositive);
  CHECK(landau::expected_error_sign(3) == Verdict::ProvenNegative);
  for (int l = 0; l < 40; ++l) CHECK(landau::expected_error_sign(l) == landau::expected_error_sign(l + 4));
}

TEST_CASE("small sweeps are proven") {
  const landau::SweepOptions opts{{128, 2048}, 1};
  const auto signs = landau::check_error_sign_pattern(table(), 60, 12, opts).summary();
  CHECK(signs.all_proven);
  CHECK(signs.points == 61 * 13);

  const auto bounds = landau::check_sharp_bounds(table(), 60, {{1, 3}, {2, 4}, {5, 8}}, opts).summary();
  CHECK(bounds.all_proven);
  CHECK(bounds.points == 61 * 3 * 2);

  const auto residual = landau::check_residual_sign(table(), 60, 8, opts).summary();
  CHECK(residual.all_proven);
  CHECK(residual.points == 60 * 9);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  const auto one = landau::check_error_sign_pattern(table(), 30, 6, {{128, 1024}, 1});
  const auto many = landau::check_error_sign_pattern(table(), 30, 6, {{128, 1024}, 3});
  REQUIRE(one.points().size() == many.points().size());
  for (std::size_t i = 0; i < one.points().size(); ++i) {
    CHECK(one.points()[i].first == many.points()[i].first);
    CHECK(one.points()[i].second == many.points()[i].second);
    CHECK(one.points()[i].observed == many.points()[i].observed);
  }
}

TEST_CASE("a corrupted coefficient produces counterexamples") {
  const CoeffTable bad = table().with_override(1, Rational(0));
  const auto s = landau::check_error_sign_pattern(bad, 20, 3, {{128, 1024}, 1}).summary();
  CHECK_FALSE(s.all_proven);
  CHECK_FALSE(s.counterexamples.empty());
  for (const auto& p : s.counterexamples) CHECK(p.second >= 1);
  CHECK_FALSE(landau::check_sharp_bounds(bad, 20, {{1, 3}}, {{128, 1024}, 1}).all_proven());
}

TEST_CASE("bound orders must lie in the right residue classes") {
  CHECK_NOTHROW(landau::validate_bound_orders({1, 3}));
  CHECK_NOTHROW(landau::validate_bound_orders({6, 8}));
  CHECK_ERROR_KIND(landau::validate_bound_orders({3, 4}), ErrorKind::InvalidOrderClass);
  CHECK_ERROR_KIND(landau::validate_bound_orders({1, 2}), ErrorKind::InvalidOrderClass);
  CHECK_ERROR_KIND(landau::check_sharp_bounds(table(), 5, {{2, 5}}), ErrorKind::InvalidOrderClass);
  CHECK_ERROR_KIND(landau::check_error_sign_pattern(table(), 5, 61), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::check_residual_sign(table(), 0, 2), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::residual(landau::ApproximantSpec(2, table()), 0, 128), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::ApproximantSpec(61, table()), ErrorKind::DomainError);
}

TEST_CASE("coefficient bounds: even and odd lower hold, odd upper does not") {
  const auto derived = landau::beta_from_alpha(landau::alpha_table(121));
  const auto report = landau::check_coefficient_bounds(derived, 60);
  const auto s = report.summary();
  CHECK(s.inconclusive.empty());
  CHECK(s.points == 52 * 4);
  CHECK(count_facet(s, "odd_upper") == 52);
  CHECK(s.counterexamples.size() == 52);

  // Independent double-precision view: alpha_tilde_{2k+1} pi (2pi)^{2k+1} - 4 ln(2k+1)
  // sits near 6, above the 2.2048 the upper bound allows, and above 0.6551.
  for (int k : {9, 20, 40, 60}) {
    const double a = derived.alpha_tilde(2 * k + 1).to_double();
    const double c = a * M_PI * std::pow(2 * M_PI, 2 * k + 1) - 4 * std::log(2 * k + 1);
    CAPTURE(k);
    CHECK(c > 5.9);
    CHECK(c < 6.05);
    const double e = derived.alpha_tilde(2 * k).to_double() * (2 * k - 1) * std::pow(2 * M_PI, 2 * k);
    CHECK(e > 1.9621);
    CHECK(e < 2.2032);
  }
  CHECK_ERROR_KIND(landau::check_coefficient_bounds(derived, 8), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::check_coefficient_bounds(derived, 61), ErrorKind::DomainError);
}

TEST_CASE("ratio table: bounds proven and every cell within one displayed unit") {
  // Ratios recomputed from the generating-function coefficients.
  const auto gen = landau::alpha_from_generating(40);
  auto tilde = [&](int m) -> const Rational& {
    return m % 2 == 0 ? gen.even[static_cast<std::size_t>(m / 2)] : gen.odd[static_cast<std::size_t>(m / 2)];
  };
  const auto derived = landau::beta_from_alpha(landau::alpha_table(40));
  const auto check = landau::check_coefficient_ratios(derived, 13);
  CHECK(check.bounds.all_proven());
  REQUIRE(check.table.size() == 36);
  REQUIRE(check.extended_odd.size() == 5);

  for (const auto& cell : check.table) {
    const int k = cell.k;
    Rational oracle;
    if (cell.row == "even_even") oracle = tilde(2 * k) / tilde(2 * k + 2);
    if (cell.row == "odd_odd") oracle = tilde(2 * k - 1) / tilde(2 * k + 1);
    if (cell.row == "even_odd_lower") oracle = Rational(2 * k - 1) * tilde(2 * k) / tilde(2 * k - 1);
    if (cell.row == "even_odd_upper") oracle = Rational(2 * k - 1) * tilde(2 * k) / tilde(2 * k + 1);
    CAPTURE(cell.row);
    CAPTURE(k);
    CHECK(cell.exact == oracle);
    const Rational unit = Rational(10).pow(-cell.decimals);
    CHECK((oracle - Rational::parse(cell.published)).abs() <= unit);
    CHECK(cell.within_one_unit);
    const bool off_by_one = (cell.row == "even_odd_lower" && (k == 1 || k == 4));
    CHECK(cell.status == (off_by_one ? landau::CellStatus::Warn : landau::CellStatus::Match));
    // The two off-by-one cells agree with truncation.
    if (off_by_one) CHECK(cell.truncated == cell.published);
  }
  for (const auto& cell : check.extended_odd) {
    CAPTURE(cell.k);
    CHECK(cell.exact == tilde(2 * cell.k + 1) / tilde(2 * cell.k + 3));
    CHECK(cell.within_one_unit);
    CHECK(cell.status == (cell.k == 11 ? landau::CellStatus::Warn : landau::CellStatus::Match));
  }
  CHECK(check.table.front().published == "56.305");
  CHECK_ERROR_KIND(landau::check_coefficient_ratios(derived, 12), ErrorKind::DomainError);
  CHECK_ERROR_KIND(landau::check_coefficient_ratios(derived, 19), ErrorKind::DomainError);
}
