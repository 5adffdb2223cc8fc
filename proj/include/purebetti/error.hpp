#ifndef PUREBETTI_ERROR_HPP
#define PUREBETTI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace purebetti {

// Every domain failure raised by the library carries one of these codes.
// The CLI prints name(code) in its diagnostic and exits with status 1.
enum class Errc {
  NotStrictlyIncreasing,
  EmptyDegreeSequence,
  NonPositiveScalar,
  NonPositiveEntry,
  NonPositiveParameter,
  ZeroPolynomial,
  NegativeDimension,
  NotPure,
  NoTermination,
  NotPureTable,
  NonzeroFirstDegree,
  NotDecomposable,
  NotMonomial,
  TooManyGenerators,
  DegreeBoundTooSmall,
  NotHomogeneous,
  VariableCountMismatch,
  SyntaxError,
  InhomogeneousPolynomial,
  UnknownVariable,
  InvalidRational,
  DivisionByZero,
  InvalidJson,
  InconsistentTable,
  InternalConsistency,
};

std::string_view name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return purebetti::name(code_); }

 private:
  Errc code_;
};

/// Positioned parse failure; position is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(Errc::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace purebetti

#endif
