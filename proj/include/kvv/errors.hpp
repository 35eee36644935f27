#pragma once

#include <stdexcept>
#include <string>

namespace kvv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A curve class, name or incidence that cannot exist numerically.
class InvalidModelError : public Error {
 public:
  using Error::Error;
};

class NotContractibleError : public Error {
 public:
  using Error::Error;
};

class UnsupportedConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a Picard-rank-one target.
class RankError : public Error {
 public:
  using Error::Error;
};

/// The floor of the pulled-back divisor is not relatively nef, so the
/// Leray spectral sequence argument does not apply.
class LerayHypothesisError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace kvv
