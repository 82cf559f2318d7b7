#pragma once

#include <stdexcept>
#include <string>

namespace unref {

enum class Status {
  Ok = 0,
  Empty,
  NonPositivePart,
  DuplicatePart,
  NoGaps,
  NoZColumn,
  OutOfRange,
  EmptyUniverse,
  PatternCollision,
  ExcludedEta,
  ConstraintViolation,
  ShapeMismatch,
  Unclassifiable,
  UnknownSuite,
  MalformedLine,
  IoFailure,
  InvalidArgument,
  VerificationFailure,
};

const char* status_name(Status s);

/// Single exception type carrying a machine-readable status.
class Error : public std::runtime_error {
 public:
  Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

}  // namespace unref
