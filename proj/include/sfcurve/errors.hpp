#pragma once

#include <stdexcept>

namespace sfcurve {

/// Base class for all library failures.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (GIFS files, lattice-path files, pattern files).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// A path enumeration outgrew the configured cap.
class EnumerationCapError : public Error {
  public:
    using Error::Error;
};

/// Floating-point drift exceeded a guard, or a requested tolerance is
/// unreachable in double precision.
class PrecisionError : public Error {
  public:
    using Error::Error;
};

}  // namespace sfcurve
