#include "landau/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "landau/acceptance.hpp"
#include "landau/coefficients.hpp"
#include "landau/error.hpp"
#include "landau/landau_constants.hpp"
#include "landau/proof_harness.hpp"
#include "landau/verifier.hpp"

namespace landau::cli {

using json = nlohmann::ordered_json;

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Coeffs: return "coeffs";
    case Command::Gn: return "gn";
    case Command::Table1: return "table1";
    case Command::VerifyTheorem: return "verify-theorem";
    case Command::VerifyBounds: return "verify-bounds";
    case Command::VerifyLemma3: return "verify-lemma3";
    case Command::VerifyLemma4: return "verify-lemma4";
    case Command::VerifySection5: return "verify-section5";
    case Command::ReportAll: return "report-all";
  }
  return "coeffs";
}

namespace {

const std::vector<std::pair<int, int>> kDefaultBoundOrders{{1, 0}, {2, 3}, {5, 4}, {5, 7}, {9, 11}, {13, 12}};

// Command defaults, applied where the config still holds its sentinel.
RunConfig with_defaults(RunConfig c) {
  auto set_n = [&](std::int64_t v) { if (c.n_max == 0) c.n_max = v; };
  auto set_l = [&](int v) { if (c.l_max < 0) c.l_max = v; };
  switch (c.command) {
    case Command::Coeffs: if (c.K == 0) c.K = 12; break;
    case Command::Gn: set_n(20); break;
    case Command::Table1: if (c.k_max == 0) c.k_max = 13; break;
    case Command::VerifyTheorem: set_n(200); set_l(20); break;
    case Command::VerifyBounds: set_n(500); if (c.bound_orders.empty()) c.bound_orders = kDefaultBoundOrders; break;
    case Command::VerifyLemma3: set_n(300); set_l(15); break;
    case Command::VerifyLemma4: if (c.k_max == 0) c.k_max = 60; break;
    case Command::VerifySection5: set_l(10); if (c.j_span == 0) c.j_span = 40; break;
    case Command::ReportAll: break;
  }
  if (c.K == 0) {
    int need = 1;
    switch (c.command) {
      case Command::Table1:
      case Command::VerifyLemma4: need = 2 * c.k_max + 3; break;
      case Command::VerifyTheorem: need = std::max(c.l_max, 1); break;
      case Command::VerifyBounds:
        for (const auto& [p, q] : c.bound_orders) need = std::max({need, p, q});
        break;
      case Command::VerifyLemma3: need = std::max(2 * c.l_max, 1); break;
      case Command::VerifySection5: need = std::max(2 * c.l_max, 12); break;
      default: break;
    }
    c.K = need;
  }
  return c;
}

CoeffTable coefficients(const RunConfig& c) {
  CoeffTable t = alpha_table(c.K);
  for (const auto& [k, value] : c.alpha_overrides) t = t.with_override(k, value);
  return t;
}

std::string_view verdict_name(Verdict v) { return to_string(v); }

json point_json(const PointResult& p, const SweepRange& sweep) {
  json j;
  j["facet"] = p.facet;
  j[sweep.first_name.empty() ? "first" : sweep.first_name] = p.first;
  if (p.second >= 0) j[sweep.second_name.empty() ? "second" : sweep.second_name] = p.second;
  j["expected"] = verdict_name(p.expected);
  j["observed"] = verdict_name(p.observed);
  j["precision_bits"] = p.precision_bits;
  return j;
}

json report_json(const VerificationReport& r) {
  const auto s = r.summary();
  const auto& sw = r.sweep();
  json j;
  j["claim"] = r.claim_id();
  json range;
  if (sw.first_lo <= sw.first_hi) range[sw.first_name] = {sw.first_lo, sw.first_hi};
  if (sw.second_lo <= sw.second_hi) range[sw.second_name] = {sw.second_lo, sw.second_hi};
  j["sweep"] = range;
  j["precision_ceiling"] = sw.precision_ceiling;
  j["points"] = s.points;
  j["all_proven"] = s.all_proven;
  j["max_precision_bits"] = s.max_precision_bits;
  j["counterexamples"] = json::array();
  for (const auto& p : s.counterexamples) j["counterexamples"].push_back(point_json(p, sw));
  j["inconclusive"] = json::array();
  for (const auto& p : s.inconclusive) j["inconclusive"].push_back(point_json(p, sw));
  return j;
}

void put_rational(json& j, const Rational& q) {
  j["numerator"] = q.numerator().get_str();
  j["denominator"] = q.denominator().get_str();
}

int exit_status(const std::vector<VerificationReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    const auto s = r.summary();
    if (!s.counterexamples.empty()) return kExitCounterexample;
    inconclusive = inconclusive || !s.inconclusive.empty();
  }
  return inconclusive ? kExitInconclusive : kExitProven;
}

std::string describe_point(const PointResult& p, const SweepRange& sw) {
  std::ostringstream os;
  os << p.facet << " " << (sw.first_name.empty() ? "first" : sw.first_name) << "=" << p.first;
  if (p.second >= 0) os << " " << (sw.second_name.empty() ? "second" : sw.second_name) << "=" << p.second;
  os << " expected " << verdict_name(p.expected) << ", observed " << verdict_name(p.observed);
  if (p.precision_bits > 0) os << " at " << p.precision_bits << " bits";
  return os.str();
}

// Emits a list of reports plus optional extra JSON fields.
void emit_reports(const RunConfig& c, std::ostream& os, const std::vector<VerificationReport>& reports,
                  const json& extra = json::object()) {
  switch (c.format) {
    case Format::Csv:
      os << "claim,points,counterexamples,inconclusive,max_precision_bits,all_proven\n";
      for (const auto& r : reports) {
        const auto s = r.summary();
        os << r.claim_id() << "," << s.points << "," << s.counterexamples.size() << "," << s.inconclusive.size()
           << "," << s.max_precision_bits << "," << (s.all_proven ? "true" : "false") << "\n";
      }
      break;
    case Format::Json: {
      json j;
      j["command"] = to_string(c.command);
      j["K"] = c.K;
      j["reports"] = json::array();
      for (const auto& r : reports) j["reports"].push_back(report_json(r));
      for (const auto& [key, value] : extra.items()) j[key] = value;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      for (const auto& r : reports) {
        const auto s = r.summary();
        os << r.claim_id() << ": " << (s.all_proven ? "proven" : "NOT proven") << " (" << s.points << " points, "
           << s.counterexamples.size() << " counterexamples, " << s.inconclusive.size() << " inconclusive, max "
           << s.max_precision_bits << " bits)\n";
        constexpr std::size_t kShown = 10;
        std::size_t shown = 0;
        for (const auto* list : {&s.counterexamples, &s.inconclusive}) {
          for (const auto& p : *list) {
            if (shown++ < kShown) os << "  " << describe_point(p, r.sweep()) << "\n";
          }
        }
        if (shown > kShown) os << "  ... " << (shown - kShown) << " more\n";
      }
      break;
  }
}

int cmd_coeffs(const RunConfig& c, std::ostream& os) {
  const CoeffTable t = coefficients(c);
  switch (c.format) {
    case Format::Csv:
      os << "k,alpha_numerator,alpha_denominator\n";
      for (int k = 1; k <= t.K(); ++k) {
        os << k << "," << t.alpha(k).numerator().get_str() << "," << t.alpha(k).denominator().get_str() << "\n";
      }
      break;
    case Format::Json: {
      json j;
      j["command"] = "coeffs";
      j["K"] = t.K();
      j["alpha"] = json::array();
      for (int k = 1; k <= t.K(); ++k) {
        json row{{"k", k}};
        put_rational(row, t.alpha(k));
        j["alpha"].push_back(row);
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      for (int k = 1; k <= t.K(); ++k) os << "alpha_" << k << " = " << t.alpha(k).to_string() << "\n";
      break;
  }
  return kExitProven;
}

int cmd_gn(const RunConfig& c, std::ostream& os, const Limits& limits) {
  const LandauTable table = LandauTable::build(c.n_max, limits);
  // Enough bits for `digits` significant decimals plus guard.
  const int bits = static_cast<int>(c.digits * 3.33) + 32;
  json rows = json::array();
  if (c.format == Format::Csv) os << "n,gn_numerator,gn_denominator,pi_gn_midpoint,digits\n";
  for (std::int64_t n = 0; n <= c.n_max; ++n) {
    const Rational& g = table[n];
    const std::string mid = pi_gn_enclosure(g, bits).midpoint_string(c.digits);
    switch (c.format) {
      case Format::Csv:
        os << n << "," << g.numerator().get_str() << "," << g.denominator().get_str() << "," << mid << ","
           << c.digits << "\n";
        break;
      case Format::Json: {
        json row{{"n", n}};
        put_rational(row, g);
        row["pi_gn_midpoint"] = mid;
        row["digits"] = c.digits;
        rows.push_back(row);
        break;
      }
      case Format::Text: os << "n=" << n << "  G_n = " << g.to_string() << "  pi G_n ~ " << mid << "\n"; break;
    }
  }
  if (c.format == Format::Json) os << json{{"command", "gn"}, {"n_max", c.n_max}, {"rows", rows}}.dump(2) << "\n";
  return kExitProven;
}

json cell_json(const RatioCell& cell) {
  json j{{"row", cell.row}, {"k", cell.k}};
  put_rational(j, cell.exact);
  j["decimals"] = cell.decimals;
  j["published"] = cell.published;
  j["rounded"] = cell.rounded;
  j["truncated"] = cell.truncated;
  j["status"] = to_string(cell.status);
  j["within_one_unit"] = cell.within_one_unit;
  return j;
}

int cmd_table1(const RunConfig& c, std::ostream& os) {
  const RatioCheck rc = check_coefficient_ratios(beta_from_alpha(coefficients(c)), c.k_max);
  bool all_within = true;
  for (const auto* list : {&rc.table, &rc.extended_odd}) {
    for (const auto& cell : *list) all_within = all_within && cell.within_one_unit;
  }
  switch (c.format) {
    case Format::Csv:
      os << "row,k1,k2,k3,k4,k5,k6,k7,k8,k9\n";
      for (int row = 0; row < 4; ++row) {
        os << kRatioRows[row];
        for (int k = 0; k < 9; ++k) os << "," << rc.table[static_cast<std::size_t>(row * 9 + k)].rounded;
        os << "\n";
      }
      break;
    case Format::Json: {
      json j{{"command", "table1"}, {"table", json::array()}, {"extended_odd", json::array()}};
      for (const auto& cell : rc.table) j["table"].push_back(cell_json(cell));
      for (const auto& cell : rc.extended_odd) j["extended_odd"].push_back(cell_json(cell));
      j["all_within_one_unit"] = all_within;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      for (int row = 0; row < 4; ++row) {
        os << std::left << std::setw(15) << kRatioRows[row];
        for (int k = 0; k < 9; ++k) {
          const auto& cell = rc.table[static_cast<std::size_t>(row * 9 + k)];
          const char mark = cell.status == CellStatus::Match ? ' ' : cell.status == CellStatus::Warn ? '*' : '!';
          os << " " << std::right << std::setw(7) << cell.rounded << mark;
        }
        os << "\n";
      }
      os << std::left << std::setw(15) << "odd_odd k=9..13";
      for (const auto& cell : rc.extended_odd) {
        os << " " << std::right << std::setw(7) << cell.rounded << (cell.status == CellStatus::Match ? ' ' : '*');
      }
      os << "\n* last digit differs from the published value (see JSON for published and truncated forms)\n";
      break;
  }
  return all_within ? kExitProven : kExitCounterexample;
}

SweepOptions sweep_options(const RunConfig& c) {
  SweepOptions o;
  o.precision.ceiling_bits = c.precision_ceiling;
  o.precision.start_bits = std::min(o.precision.start_bits, c.precision_ceiling);
  o.threads = c.threads;
  return o;
}

int cmd_verify(const RunConfig& c, std::ostream& os) {
  const CoeffTable coeffs = coefficients(c);
  const SweepOptions opts = sweep_options(c);
  std::vector<VerificationReport> reports;
  json extra = json::object();
  switch (c.command) {
    case Command::VerifyTheorem: reports.push_back(check_error_sign_pattern(coeffs, c.n_max, c.l_max, opts)); break;
    case Command::VerifyBounds: {
      std::vector<BoundOrders> orders;
      for (const auto& [p, q] : c.bound_orders) orders.push_back({p, q});
      reports.push_back(check_sharp_bounds(coeffs, c.n_max, orders, opts));
      break;
    }
    case Command::VerifyLemma3: reports.push_back(check_residual_sign(coeffs, c.n_max, c.l_max, opts)); break;
    case Command::VerifyLemma4: {
      const DerivedCoeffs derived = beta_from_alpha(coeffs);
      reports.push_back(check_coefficient_bounds(derived, c.k_max, opts.precision));
      reports.push_back(check_coefficient_ratios(derived, c.k_max).bounds);
      break;
    }
    case Command::VerifySection5: {
      reports.push_back(check_even_residual_sign(coeffs, c.l_max, c.j_span));
      reports.push_back(check_combined_residual_sign(coeffs, c.l_max, c.j_span));
      reports.push_back(check_gap_values(coeffs));
      reports.push_back(check_odd_even_values(coeffs));
      auto values_json = [](const std::vector<CheckpointValue>& values) {
        json arr = json::array();
        for (const auto& v : values) {
          json row{{"l", v.l}};
          put_rational(row, v.exact);
          row["decimal"] = to_fixed(v.exact, 6, DecimalRounding::HalfEven);
          row["shown"] = v.displayed.digits + (v.displayed.exponent ? "e" + std::to_string(v.displayed.exponent) : "");
          row["matches"] = v.matches;
          arr.push_back(row);
        }
        return arr;
      };
      extra["gap_values"] = values_json(gap_checkpoint_values(coeffs));
      extra["odd_even_values"] = values_json(odd_even_checkpoint_values(coeffs));
      break;
    }
    default: break;
  }
  emit_reports(c, os, reports, extra);
  return exit_status(reports);
}

int cmd_report_all(const RunConfig& c, std::ostream& os) {
  AcceptanceOptions opts;
  opts.precision = sweep_options(c).precision;
  opts.threads = c.threads;
  opts.alpha_overrides = c.alpha_overrides;
  const auto results = run_acceptance(opts);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  switch (c.format) {
    case Format::Csv:
      os << "criterion,passed,documented_discrepancy,title,detail\n";
      for (const auto& r : results) {
        os << r.id << "," << (r.passed ? "true" : "false") << "," << (r.documented_discrepancy ? "true" : "false")
           << ",\"" << r.title << "\",\"" << r.detail << "\"\n";
      }
      break;
    case Format::Json: {
      json j{{"command", "report-all"}, {"all_passed", all}, {"criteria", json::array()}};
      for (const auto& r : results) {
        j["criteria"].push_back({{"id", r.id},
                                 {"title", r.title},
                                 {"passed", r.passed},
                                 {"documented_discrepancy", r.documented_discrepancy},
                                 {"detail", r.detail}});
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      for (const auto& r : results) {
        os << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": " << r.detail << "\n";
      }
      break;
  }
  return all ? kExitProven : kExitCounterexample;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_metadata(const RunConfig& c, const std::string& path, double seconds, int status) {
  json overrides = json::array();
  for (const auto& [k, value] : c.alpha_overrides) overrides.push_back({{"k", k}, {"alpha", value.to_string()}});
  const json meta{{"command", to_string(c.command)},
                  {"finished_utc", utc_timestamp()},
                  {"elapsed_seconds", seconds},
                  {"exit_status", status},
                  {"n_max", c.n_max},
                  {"l_max", c.l_max},
                  {"K", c.K},
                  {"k_max", c.k_max},
                  {"j_span", c.j_span},
                  {"precision_ceiling", c.precision_ceiling},
                  {"threads", c.threads},
                  {"alpha_overrides", overrides}};
  std::ofstream f(path + ".meta.json", std::ios::binary);
  f << meta.dump(2) << "\n";
}

}  // namespace

void validate(const RunConfig& c, const Limits& limits) {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
  auto over = [](const std::string& what) { throw Error(ErrorKind::ResourceLimit, what); };
  if (c.n_max < 1) bad("--n-max must be positive");
  if (c.n_max > limits.max_n) over("--n-max exceeds " + std::to_string(limits.max_n) + " (LANDAU_MAX_N)");
  if (c.K < 1) bad("--K must be positive");
  if (c.K > limits.max_k) over("--K exceeds " + std::to_string(limits.max_k) + " (LANDAU_MAX_K)");
  if (c.l_max > limits.max_k || c.k_max > limits.max_k) over("index bound exceeds LANDAU_MAX_K");
  if (c.precision_ceiling < 16) bad("--precision-ceiling must be at least 16 bits");
  if (c.precision_ceiling > limits.max_precision_bits) {
    over("--precision-ceiling exceeds " + std::to_string(limits.max_precision_bits) + " (LANDAU_MAX_PRECISION)");
  }
  if (c.digits < 1 || c.digits > 10000) bad("--digits must be in 1..10000");
  for (const auto& [k, value] : c.alpha_overrides) {
    if (k < 1) bad("--override-alpha index must be positive");
  }
}

int run(const RunConfig& raw, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  int status = kExitUsage;
  const RunConfig c = with_defaults(raw);
  try {
    const Limits limits = Limits::from_environment();
    RunConfig checked = c;
    if (checked.n_max == 0) checked.n_max = 1;  // commands without an n range
    if (checked.l_max < 0) checked.l_max = 0;
    validate(checked, limits);

    std::ostringstream body;
    switch (c.command) {
      case Command::Coeffs: status = cmd_coeffs(c, body); break;
      case Command::Gn: status = cmd_gn(c, body, limits); break;
      case Command::Table1: status = cmd_table1(c, body); break;
      case Command::ReportAll: status = cmd_report_all(c, body); break;
      default: status = cmd_verify(c, body); break;
    }
    if (c.output_path) {
      std::ofstream f(*c.output_path, std::ios::binary);
      if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + *c.output_path);
      f << body.str();
      f.close();
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      write_metadata(c, *c.output_path, seconds, status);
    } else {
      out << body.str();
    }
  } catch (const std::exception& e) {
    err << "landau: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}

namespace {

std::pair<int, Rational> parse_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorKind::InvalidArgument, "--override-alpha expects k=value, got '" + text + "'");
  }
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(text.substr(0, eq), &used);
    if (used != eq) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "bad index in --override-alpha '" + text + "'");
  }
  return {k, Rational::parse(text.substr(eq + 1))};
}

std::pair<int, int> parse_orders(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_p = 0, used_q = 0;
    const int p = std::stoi(text.substr(0, colon), &used_p);
    const std::string rest = text.substr(colon + 1);
    const int q = std::stoi(rest, &used_q);
    if (used_p != colon || used_q != rest.size()) throw std::invalid_argument(text);
    return {p, q};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "--pair expects p:q, got '" + text + "'");
  }
}

constexpr const char* kEnvironmentHelp =
    "Environment overrides for hard ceilings:\n"
    "  LANDAU_MAX_N          largest accepted --n-max (default 100000)\n"
    "  LANDAU_MAX_K          largest coefficient index (default 400)\n"
    "  LANDAU_MAX_PRECISION  largest --precision-ceiling in bits (default 65536)\n"
    "\n"
    "Exit status: 0 proven or written, 1 counterexample, 2 inconclusive at the\n"
    "precision ceiling, 3 usage or configuration error.";

}  // namespace

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Landau constants: exact coefficients and certified inequality sweeps", "landau"};
  app.footer(kEnvironmentHelp);
  app.require_subcommand(1);

  RunConfig config;
  // Options whose explicit value must be positive (0 is the "use default" sentinel).
  std::vector<CLI::Option*> positive;
  std::vector<std::string> overrides;
  std::vector<std::string> pairs;
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}, {"text", Format::Text}};

  auto common = [&](CLI::App* sub, Command command) {
    sub->callback([&config, command] { config.command = command; });
    sub->add_option("--format", config.format, "csv, json or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", config.output_path, "write the artifact here (metadata goes to <path>.meta.json)");
    positive.push_back(sub->add_option("--K", config.K, "coefficient table size (default: what the command needs)"));
    sub->add_option("--override-alpha", overrides, "replace alpha_k, as k=num/den (repeatable)");
    return sub;
  };
  auto sweep = [&](CLI::App* sub) {
    sub->add_option("--precision-ceiling", config.precision_ceiling, "largest working precision in bits")
        ->capture_default_str();
    sub->add_option("--threads", config.threads, "worker threads (0 = hardware concurrency)");
    return sub;
  };

  common(app.add_subcommand("coeffs", "alpha_1..alpha_K as exact rationals"), Command::Coeffs);
  auto* gn = common(app.add_subcommand("gn", "G_0..G_n exactly, with pi G_n to --digits"), Command::Gn);
  positive.push_back(gn->add_option("--n-max", config.n_max, "last n (default 20)"));
  gn->add_option("--digits", config.digits, "significant digits of pi G_n")->capture_default_str();
  auto* table1 = common(app.add_subcommand("table1", "ratio table of the normalized coefficients"), Command::Table1);
  positive.push_back(table1->add_option("--k-max", config.k_max, "ratio bound range (default 13)"));

  auto* theorem = sweep(common(app.add_subcommand("verify-theorem", "sign pattern of the truncation errors"),
                               Command::VerifyTheorem));
  positive.push_back(theorem->add_option("--n-max", config.n_max, "last n (default 200)"));
  theorem->add_option("--l-max", config.l_max, "last truncation order (default 20)");

  auto* bounds = sweep(common(app.add_subcommand("verify-bounds", "A_p(N) < pi G_n < A_q(N) for order pairs"),
                              Command::VerifyBounds));
  positive.push_back(bounds->add_option("--n-max", config.n_max, "last n (default 500)"));
  bounds->add_option("--pair", pairs, "p:q order pair (repeatable; default the six standard pairs)");

  auto* lemma3 = sweep(common(app.add_subcommand("verify-lemma3", "sign of the difference-equation residual"),
                              Command::VerifyLemma3));
  positive.push_back(lemma3->add_option("--n-max", config.n_max, "last n (default 300)"));
  lemma3->add_option("--l-max", config.l_max, "residual orders 2l for l up to this (default 15)");

  auto* lemma4 = sweep(common(app.add_subcommand("verify-lemma4", "coefficient bounds and ratio bounds"),
                              Command::VerifyLemma4));
  positive.push_back(lemma4->add_option("--k-max", config.k_max, "last k (default 60)"));

  auto* section5 = common(app.add_subcommand("verify-section5", "exact residual-coefficient checks"),
                          Command::VerifySection5);
  section5->add_option("--l-max", config.l_max, "last l (default 10)");
  positive.push_back(section5->add_option("--j-span", config.j_span, "j runs over l+1..l+span (default 40)"));

  sweep(common(app.add_subcommand("report-all", "every acceptance check in one summary"), Command::ReportAll));

  try {
    app.parse(argc, argv);
    for (const auto& o : overrides) config.alpha_overrides.push_back(parse_override(o));
    for (const auto& p : pairs) config.bound_orders.push_back(parse_orders(p));
    for (const auto* opt : positive) {
      if (opt->count() > 0 && opt->as<long long>() < 1) {
        throw Error(ErrorKind::InvalidArgument, opt->get_name() + " must be positive");
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitProven : kExitUsage;
  } catch (const std::exception& e) {
    err << "landau: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace landau::cli
