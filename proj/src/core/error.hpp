#pragma once

#include <stdexcept>
#include <string>

namespace macver {

// Base of every error thrown by the library. The C API maps each subclass to
// one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: malformed labels, dimension mismatches, invalid ranks.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Arguments well formed but outside the operation's domain (e.g. a vector
// that is not a root, a weight outside P).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

#define MACVER_ENSURE(cond, msg)                                   \
  do {                                                             \
    if (!(cond)) throw ::macver::InvariantError(std::string(msg)); \
  } while (0)

}  // namespace macver
