#pragma once

#include <stdexcept>
#include <string>

namespace nambu {

/// Every library failure carries a kind; the CLI maps kinds to exit codes.
enum class ErrorKind {
  DimensionMismatch,
  IndexOutOfRange,
  Parse,
  NonGradedSubspace,
  NotAnIdeal,
  EndomorphismCheckFailed,
  NotACochain,
  CocycleNotClosed,
  CocycleNotEven,
  CocycleNotSkew,
  NoCompatibleSection,
  SectionInvalid,
  CoadjointMissing,
  ThetaNotClosed,
  ThetaNotCyclic,
  NotNilpotent,
  NotMetric,
  NotSurjective,
  OddDimension,
  NotHalfDimensional,
  NotIsotropic,
  ComplementNotFound,
  NoStableIsotropicVector,
  NeedsFieldExtension,
  NotARepresentation,
  PostCheckFailed,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind), detail_(what) {}
  ErrorKind kind() const { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Raised when a step needs a square root that is not rational.
/// The discriminant is the rational whose square root is missing.
class NeedsFieldExtension : public Error {
 public:
  NeedsFieldExtension(const std::string& discriminant, const std::string& what)
      : Error(ErrorKind::NeedsFieldExtension, what + " (discriminant " + discriminant + ")"),
        discriminant_(discriminant), message_(what) {}
  const std::string& discriminant() const { return discriminant_; }
  const std::string& message() const { return message_; }

 private:
  std::string discriminant_, message_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace nambu
