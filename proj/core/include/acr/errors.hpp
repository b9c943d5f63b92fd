#pragma once

#include <stdexcept>
#include <string>

namespace acr {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatches, out-of-range indices, non-square determinants, ...
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Mathematically invalid input (non-positive point, zero denominator, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A validation oracle failed to produce a reference value (e.g. Newton
// continuation did not converge within its iteration cap).
class OracleFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace acr
