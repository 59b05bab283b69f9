#ifndef MOMCUT_ERROR_HPP
#define MOMCUT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace momcut {

enum class ErrorCode {
  InvalidArgument,
  ZeroMass,
  DomainError,
  BadGrid,
  GridMismatch,
  NotNormalized,
  EmptyData,
  OutOfDomain,
  OrderMismatch,
  InsufficientMoments,
  NegativeBound,
  BadTolerance,
  BadSigma,
  BadBand,
  ParseError,
  DegenerateDomain,
  DomainViolation,
  IoError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroMass: return "ZeroMass";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::InsufficientMoments: return "InsufficientMoments";
    case ErrorCode::NegativeBound: return "NegativeBound";
    case ErrorCode::BadTolerance: return "BadTolerance";
    case ErrorCode::BadSigma: return "BadSigma";
    case ErrorCode::BadBand: return "BadBand";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the failure
/// class; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Error tied to a position in an input (line number, sample index).
class LocatedError : public Error {
 public:
  LocatedError(ErrorCode code, std::size_t location, const std::string& message)
      : Error(code, message), location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

namespace detail {

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace detail

}  // namespace momcut

#endif  // MOMCUT_ERROR_HPP
