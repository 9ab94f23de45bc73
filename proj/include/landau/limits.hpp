#pragma once

#include <cstdint>

namespace landau {

/// Hard ceilings on table sizes and working precision.
///
/// Defaults can be overridden through the environment:
///   LANDAU_MAX_N          largest n accepted by the Landau-constant tables
///   LANDAU_MAX_K          largest number of expansion coefficients
///   LANDAU_MAX_PRECISION  largest precision ceiling (bits) for sweeps
struct Limits {
  std::int64_t max_n = 100000;
  int max_k = 400;
  int max_precision_bits = 65536;

  static Limits defaults() noexcept { return {}; }
  static Limits from_environment();
};

}  // namespace landau
