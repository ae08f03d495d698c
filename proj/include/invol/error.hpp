#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invol {

enum class ErrorCode {
  Syntax,
  ZeroPolynomial,
  DegreeCapExceeded,
  InvalidArgument,
  NotInvolution,
  NotIntertwining,
  NotAnAutomorphism,
  JCCandidate,
  NotConjugateToAlpha,
  NotInImage,
  JacobianNotUnit,
  HypothesisFailed,
  SymmetryHypothesisFailed,
  CertificateFailure,
  UnknownSuite,
  AssertionFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library. The code identifies the
/// contract that was violated; the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Internal consistency check. Failure means a bug.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::AssertionFailure, what);
}

}  // namespace invol
