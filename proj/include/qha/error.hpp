#pragma once
#include <stdexcept>
#include <string>

namespace qha {

// Error taxonomy maps onto the CLI exit-code contract:
// input problems -> 1, computational caps -> 2, internal bugs abort loudly.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

// NotFiniteDimensional at max_path_length, subset cap exceeded, ...
struct CapError : Error {
  using Error::Error;
};

struct UnsupportedFieldError : Error {
  using Error::Error;
};

// Violation of an invariant the engine itself guarantees.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace qha
