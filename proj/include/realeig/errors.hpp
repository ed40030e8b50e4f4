#pragma once

#include <stdexcept>
#include <string>

namespace realeig {

// Every failure raised by the library derives from Error so callers (notably
// the CLI) can map the whole family onto one exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  using Error::Error;
};

class ParityError : public Error {
  using Error::Error;
};

class ArgumentError : public Error {
  using Error::Error;
};

class RootCountError : public Error {
  using Error::Error;
};

class NormalizationError : public Error {
  using Error::Error;
};

class EmptyError : public Error {
  using Error::Error;
};

class PreconditionError : public Error {
  using Error::Error;
};

class CertificationError : public Error {
  using Error::Error;
};

class DegenerateCriticalPointError : public Error {
  using Error::Error;
};

class ParseError : public Error {
  using Error::Error;
};

/// Raised when no epsilon in the schedule produced a certified level.
/// diagnostics() carries the solver report of the last attempt.
class EpsilonExhaustedError : public Error {
public:
  EpsilonExhaustedError(const std::string& what, std::string diagnostics)
      : Error(what), diagnostics_(std::move(diagnostics)) {}

  const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
  std::string diagnostics_;
};

}  // namespace realeig
