#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "landau/enclosure.hpp"
#include "landau/limits.hpp"
#include "landau/rational.hpp"

namespace landau {

/// G_0..G_{n_max}, built with the second-order recurrence
/// G_{n+1} - G_n = ((2n+1)/(2n+2))^2 (G_n - G_{n-1}).
class LandauTable {
 public:
  static LandauTable build(std::int64_t n_max, const Limits& limits = Limits::defaults());

  std::int64_t n_max() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }
  const Rational& operator[](std::int64_t n) const;
  std::span<const Rational> values() const noexcept { return values_; }

 private:
  explicit LandauTable(std::vector<Rational> values) : values_(std::move(values)) {}
  std::vector<Rational> values_;
};

/// G_n = sum_{m=0}^{n} ((2m-1)!!/(2m)!!)^2 by direct summation; each term is
/// the previous one times ((2m-1)/(2m))^2.
Rational gn_exact(std::int64_t n, const Limits& limits = Limits::defaults());

LandauTable gn_table(std::int64_t n_max, const Limits& limits = Limits::defaults());

/// Enclosure of pi * G_n.
Enclosure pi_gn_enclosure(std::int64_t n, int precision_bits, const Limits& limits = Limits::defaults());
Enclosure pi_gn_enclosure(const Rational& gn, int precision_bits);

}  // namespace landau
