#pragma once

#include <doctest.h>

#include <cstdint>
#include <random>

#include "landau/error.hpp"
#include "landau/power_series.hpp"
#include "landau/rational.hpp"

namespace landau::testing {

// Every property test draws from this fixed seed so failures replay exactly.
inline constexpr std::uint64_t kSeed = 0x5eed'1a2d'0c0f'fee5ULL;

class Generator {
 public:
  explicit Generator(std::uint64_t seed = kSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigInt big_integer(int max_bits) {
    BigInt v = 0;
    const int words = 1 + static_cast<int>(integer(0, max_bits / 32));
    for (int i = 0; i < words; ++i) {
      v <<= 32;
      v += static_cast<unsigned long>(integer(0, 0xffffffffL));
    }
    return integer(0, 1) ? BigInt(-v) : v;
  }

  Rational rational(int max_bits = 96) {
    BigInt den = big_integer(max_bits);
    if (den == 0) den = 1;
    return Rational(big_integer(max_bits), den);
  }

  Rational nonzero_rational(int max_bits = 96) {
    Rational q = rational(max_bits);
    return q.is_zero() ? Rational(1) : q;
  }

  /// Random series with small rational coefficients; `unit` forces c_0 != 0.
  PowerSeries series(int order, bool unit = false) {
    std::vector<Rational> c;
    for (int i = 0; i <= order; ++i) c.emplace_back(BigInt(integer(-9, 9)), BigInt(integer(1, 7)));
    if (unit && c[0].is_zero()) c[0] = Rational(1);
    return PowerSeries(std::move(c), order);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace landau::testing

#define CHECK_ERROR_KIND(expr, expected_kind)                          \
  do {                                                                 \
    bool landau_thrown_ = false;                                       \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const ::landau::Error& landau_e_) {                       \
      landau_thrown_ = true;                                           \
      CHECK_MESSAGE(landau_e_.kind() == (expected_kind), landau_e_.what()); \
    }                                                                  \
    CHECK_MESSAGE(landau_thrown_, "expected " #expected_kind);         \
  } while (0)
