#include "euclab/error.hpp"

namespace euclab {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::DegreeOrder: return "DegreeOrder";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::InfeasibleSpec: return "InfeasibleSpec";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace euclab
