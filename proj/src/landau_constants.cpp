#include "landau/landau_constants.hpp"

#include <string>

#include "landau/error.hpp"

namespace landau {

namespace {

void check_n(std::int64_t n, const Limits& limits) {
  if (n < 0) throw Error(ErrorKind::DomainError, "n must be non-negative, got " + std::to_string(n));
  if (n > limits.max_n) {
    throw Error(ErrorKind::ResourceLimit,
                "n = " + std::to_string(n) + " exceeds table ceiling " + std::to_string(limits.max_n));
  }
}

}  // namespace

const Rational& LandauTable::operator[](std::int64_t n) const {
  if (n < 0 || n > n_max()) throw Error(ErrorKind::DomainError, "G_" + std::to_string(n) + " not in table");
  return values_[static_cast<std::size_t>(n)];
}

LandauTable LandauTable::build(std::int64_t n_max, const Limits& limits) {
  check_n(n_max, limits);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n_max) + 1);
  values.emplace_back(1);
  if (n_max >= 1) values.push_back(Rational(5, 4));
  for (std::int64_t n = 1; n < n_max; ++n) {
    const Rational ratio(BigInt(2 * n + 1), BigInt(2 * n + 2));
    const auto i = static_cast<std::size_t>(n);
    values.push_back(values[i] + ratio * ratio * (values[i] - values[i - 1]));
  }
  return LandauTable(std::move(values));
}

Rational gn_exact(std::int64_t n, const Limits& limits) {
  check_n(n, limits);
  Rational term(1);
  Rational sum(1);
  for (std::int64_t m = 1; m <= n; ++m) {
    const Rational ratio(BigInt(2 * m - 1), BigInt(2 * m));
    term *= ratio * ratio;
    sum += term;
  }
  return sum;
}

LandauTable gn_table(std::int64_t n_max, const Limits& limits) { return LandauTable::build(n_max, limits); }

Enclosure pi_gn_enclosure(const Rational& gn, int precision_bits) {
  return const_pi(precision_bits) * Enclosure(gn, precision_bits);
}

Enclosure pi_gn_enclosure(std::int64_t n, int precision_bits, const Limits& limits) {
  return pi_gn_enclosure(gn_exact(n, limits), precision_bits);
}

}  // namespace landau
