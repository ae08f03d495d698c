#include "invol/rational.hpp"

#include <cctype>

#include "invol/error.hpp"

namespace invol {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotIntertwining: return "NotIntertwining";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::JCCandidate: return "JCCandidate";
    case ErrorCode::NotConjugateToAlpha: return "NotConjugateToAlpha";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::JacobianNotUnit: return "JacobianNotUnit";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::SymmetryHypothesisFailed: return "SymmetryHypothesisFailed";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorCode::Syntax,
            message + " at position " + std::to_string(position)),
      position_(position) {}

std::string to_string(const Rat& r) { return r.get_str(10); }

Rat parse_rat(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw Error(ErrorCode::InvalidArgument,
                "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace invol
