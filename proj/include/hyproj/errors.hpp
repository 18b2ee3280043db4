#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyproj {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coordinate that does not describe a point of the half-plane or disc.
class InvalidPoint : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (tangential angle, |z| >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class CurveError : public Error {
 public:
  using Error::Error;
};

/// The best projection candidate sits too close to the end of the sampled
/// parameter domain, so the answer may depend on the truncation.
class InconclusiveProjection : public Error {
 public:
  using Error::Error;
};

class OrbitTruncated : public Error {
 public:
  OrbitTruncated(const std::string& what, std::size_t last_valid)
      : Error(what), last_valid_(last_valid) {}
  std::size_t last_valid_index() const noexcept { return last_valid_; }

 private:
  std::size_t last_valid_;
};

class EstimationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A counterexample scenario failed to reproduce the expected behaviour.
class CounterexampleNotReproduced : public Error {
 public:
  using Error::Error;
};

}  // namespace hyproj
