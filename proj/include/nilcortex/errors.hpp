#pragma once

#include <stdexcept>
#include <string>

namespace nilcortex {

/// Base of every error raised by the library. The C API maps each
/// subclass to its own status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (rationals, covectors, structure-constants files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix lengths that do not match the ambient dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside its domain (d < 2, variable index out of range, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The closed-form coadjoint exponential needs nilpotency class <= 2.
class ClassError : public Error {
 public:
  using Error::Error;
};

/// Covector outside the generic layer z_1 != 0.
class OutOfLayerError : public Error {
 public:
  using Error::Error;
};

/// Target covector is not on the cortex variety.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// Witness target on the stratum where some y_{2j-1} = 0 (j < d); the exact
/// schedule divides by those coordinates.
class DegenerateStratumError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilcortex
