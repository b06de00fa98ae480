#pragma once

#include <stdexcept>
#include <string>

namespace naijavar {

// Runtime failure: I/O, unalignable input, internal inconsistencies.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected input: malformed files, bad arguments, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace naijavar
