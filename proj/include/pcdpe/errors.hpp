#pragma once

#include <stdexcept>
#include <string>

namespace pcdpe {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degenerate geometry: collinear triangle, flat simplex, bad mesh input.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain (point outside support, bad
// parameter range, malformed configuration).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request exceeds an implementation capability bound (e.g. exact domination
// search above the brute-force vertex limit).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A standardized statistic cannot be formed because the limiting variance is
// not positive (AND-underlying graphs at r = 1 or r = infinity).
class DegenerateStatisticError : public Error {
 public:
  using Error::Error;
};

// Rejection sampler cannot make progress (acceptance probability ~ 0).
class SamplingError : public Error {
 public:
  using Error::Error;
};

// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcdpe
