#include "landau/report.hpp"

#include <algorithm>

namespace landau {

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Proven: return "proven";
    case Outcome::Counterexample: return "counterexample";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Outcome PointResult::outcome() const noexcept {
  if (observed == expected) return Outcome::Proven;
  // An exact check that lands on zero has refuted a strict inequality.
  if (observed == Verdict::Inconclusive) return precision_bits == 0 ? Outcome::Counterexample : Outcome::Inconclusive;
  return Outcome::Counterexample;
}

void VerificationReport::merge(const VerificationReport& other) {
  points_.insert(points_.end(), other.points_.begin(), other.points_.end());
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  s.points = points_.size();
  for (const auto& p : points_) {
    s.max_precision_bits = std::max(s.max_precision_bits, p.precision_bits);
    switch (p.outcome()) {
      case Outcome::Proven: break;
      case Outcome::Counterexample: s.counterexamples.push_back(p); break;
      case Outcome::Inconclusive: s.inconclusive.push_back(p); break;
    }
  }
  s.all_proven = s.counterexamples.empty() && s.inconclusive.empty();
  return s;
}

bool VerificationReport::all_proven() const {
  return std::all_of(points_.begin(), points_.end(),
                     [](const PointResult& p) { return p.outcome() == Outcome::Proven; });
}

Verdict sign_verdict(int sign) noexcept {
  if (sign > 0) return Verdict::ProvenPositive;
  if (sign < 0) return Verdict::ProvenNegative;
  return Verdict::Inconclusive;
}

}  // namespace landau
