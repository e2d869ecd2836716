#pragma once

#include <stdexcept>
#include <string>

namespace plab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct PoleError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

// A period search ran past its caller-supplied bound.
struct LimitError : Error {
  using Error::Error;
};

struct DegenerateError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace plab
