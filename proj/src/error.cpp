#include "landau/error.hpp"

namespace landau {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DivisorNotUnit: return "DivisorNotUnit";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
    case ErrorKind::InvalidOrderClass: return "InvalidOrderClass";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace landau
