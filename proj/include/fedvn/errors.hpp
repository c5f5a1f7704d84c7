#pragma once

#include <stdexcept>
#include <string>

namespace fedvn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad shapes or misuse of the tape (non-scalar backward, missing grad, ...).
struct TapeError : Error {
  using Error::Error;
};

// Invalid experiment configuration (unknown key, out-of-range value).
struct ConfigError : Error {
  using Error::Error;
};

// Unreadable or malformed dataset files.
struct DataError : Error {
  using Error::Error;
};

// NaN losses, singular matrices, failed convergence.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace fedvn
