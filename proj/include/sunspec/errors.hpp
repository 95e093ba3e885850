#pragma once

#include <stdexcept>
#include <string>

namespace sunspec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, out-of-range indices, mismatched lengths.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class MixedOrder : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroSum : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class XiNotAdmissible : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ConstraintViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A configured resource cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class SizeCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

/// An exact identity that must hold did not. Always an internal bug or corrupted input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class NotRational : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

class IntegralityViolation : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

}  // namespace sunspec
