#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landau/enclosure.hpp"

namespace landau {

enum class Outcome { Proven, Counterexample, Inconclusive };

std::string_view to_string(Outcome o) noexcept;

/// One certified point of a sweep. `first`/`second` are the sweep indices
/// (n and l, k, or l and j depending on the claim); `facet` names which of
/// several inequalities at that point was checked.
struct PointResult {
  std::string facet;
  std::int64_t first = 0;
  std::int64_t second = -1;
  Verdict expected = Verdict::ProvenPositive;
  Verdict observed = Verdict::Inconclusive;
  /// Precision that settled the verdict; 0 for exact rational checks.
  int precision_bits = 0;

  Outcome outcome() const noexcept;
};

/// Parameter ranges covered by a sweep (inclusive). Unused ranges stay empty
/// (lo > hi).
struct SweepRange {
  std::string first_name;
  std::int64_t first_lo = 0;
  std::int64_t first_hi = -1;
  std::string second_name;
  std::int64_t second_lo = 0;
  std::int64_t second_hi = -1;
  int precision_ceiling = 0;
};

struct ReportSummary {
  bool all_proven = true;
  std::size_t points = 0;
  std::vector<PointResult> counterexamples;
  std::vector<PointResult> inconclusive;
  int max_precision_bits = 0;
};

class VerificationReport {
 public:
  VerificationReport(std::string claim_id, SweepRange sweep)
      : claim_id_(std::move(claim_id)), sweep_(std::move(sweep)) {}

  const std::string& claim_id() const noexcept { return claim_id_; }
  const SweepRange& sweep() const noexcept { return sweep_; }
  const std::vector<PointResult>& points() const noexcept { return points_; }

  void add(PointResult point) { points_.push_back(std::move(point)); }
  /// Appends another report's points (same claim); order is preserved.
  void merge(const VerificationReport& other);

  /// all_proven iff there are no counterexamples and no inconclusive points.
  ReportSummary summary() const;
  bool all_proven() const;

 private:
  std::string claim_id_;
  SweepRange sweep_;
  std::vector<PointResult> points_;
};

/// Observed verdict for an exact check from the sign of a rational (zero maps
/// to Inconclusive, which PointResult treats as a counterexample).
Verdict sign_verdict(int sign) noexcept;

}  // namespace landau
