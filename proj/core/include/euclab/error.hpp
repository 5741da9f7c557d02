#ifndef EUCLAB_ERROR_HPP
#define EUCLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace euclab {

enum class Errc {
  InvalidArgument,
  CompositeModulus,
  DivisionByZero,
  ParseError,
  DivisionByZeroPoly,
  DegreeOrder,
  ZeroInput,
  NotSquarefree,
  InfeasibleSpec,
  EnumerationTooLarge,
  IndexOutOfRange,
  TooLarge,
  DimensionMismatch,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace euclab

#endif  // EUCLAB_ERROR_HPP
