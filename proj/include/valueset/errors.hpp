#pragma once

#include <stdexcept>
#include <string>

namespace valueset {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad polynomial text, non-square-free
// modulus, composite entry in a prime list, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// f has no critical structure (deg f < 2), or the statistic is meaningless
// (mean spacing 1).
class Degenerate : public Error {
 public:
  using Error::Error;
};

// f' vanishes identically mod p, or p is too small for the resultant route.
// Callers fall back to direct enumeration and flag the result approximate.
class WildCase : public Error {
 public:
  using Error::Error;
};

// A configured memory or work cap would be exceeded.
class ResourceCap : public Error {
 public:
  using Error::Error;
};

}  // namespace valueset
