#include "landau/limits.hpp"

#include <cerrno>
#include <cstdlib>
#include <string>

#include "landau/error.hpp"

namespace landau {

namespace {

std::int64_t read_env(const char* name, std::int64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (errno != 0 || end == raw || *end != '\0' || value <= 0) {
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  return value;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  limits.max_n = read_env("LANDAU_MAX_N", limits.max_n);
  limits.max_k = static_cast<int>(read_env("LANDAU_MAX_K", limits.max_k));
  limits.max_precision_bits = static_cast<int>(read_env("LANDAU_MAX_PRECISION", limits.max_precision_bits));
  return limits;
}

}  // namespace landau
