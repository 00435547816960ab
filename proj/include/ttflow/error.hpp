#pragma once

#include <stdexcept>
#include <string>

namespace ttflow {

enum class ErrorKind {
  InvalidArgument,
  InvalidOrdering,
  LightlikeInput,
  OutOfRegion,
  DegenerateDenominator,
  StepOutOfRegion,
  NonpositiveAcceleration,
  OutOfRange,
  SpecMismatch,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception raised by every library operation whose precondition fails.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ttflow
