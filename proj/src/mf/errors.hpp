#ifndef MF_ERRORS_HPP
#define MF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mf {

// Exception hierarchy; the C API maps each type onto an mf_status code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgumentError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Operation not valid in the current state (e.g. stepping a finished round).
struct StateError : Error {
  using Error::Error;
};

// Checkpoint layout does not match what the caller configured.
struct LayoutError : Error {
  using Error::Error;
};

// Non-finite values reached the optimizer.
struct NumericError : Error {
  using Error::Error;
};

struct UnknownOpponentError : Error {
  using Error::Error;
};

}  // namespace mf

#endif  // MF_ERRORS_HPP
