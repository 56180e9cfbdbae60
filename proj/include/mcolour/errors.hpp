#pragma once

#include <stdexcept>
#include <string>

namespace mcolour {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Template assignment violates an invariant (wrong length, bad colour id,
// declared k inconsistent with the assignment).
struct InvalidAssignment : Error {
  using Error::Error;
};

// Malformed template file. line is 1-based; 0 when not attributable.
struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// A desk-scale cap (a <= 24 for templates, a <= 8 for canonicalization,
// l <= 16 for factorizations) was exceeded.
struct CapExceeded : Error {
  using Error::Error;
};

struct InvalidPartition : Error {
  using Error::Error;
};

struct InvalidVertex : Error {
  using Error::Error;
};

struct NoWitness : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

// A condition that is mathematically impossible unless the implementation
// is wrong; callers are not expected to handle it.
struct InternalInvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mcolour
