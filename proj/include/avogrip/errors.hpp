#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace avogrip {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an input value was violated. Carries the offending field.
class DomainError : public Error {
 public:
  DomainError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// An angle fell outside the mechanism's actuation range.
class RangeError : public DomainError {
 public:
  RangeError(double value, double lo, double hi, const std::string& what)
      : DomainError("alpha", what), value_(value), lo_(lo), hi_(hi) {}
  double value() const noexcept { return value_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double value_;
  double lo_;
  double hi_;
};

/// Finger center coincides with the ring center; angles are undefined.
class DegenerateConfiguration : public DomainError {
 public:
  explicit DegenerateConfiguration(const std::string& what) : DomainError("d", what) {}
};

/// The configuration cannot transmit a closing moment (cos(theta) <= 0).
class NonTransmittingConfiguration : public DomainError {
 public:
  explicit NonTransmittingConfiguration(const std::string& what) : DomainError("alpha", what) {}
};

/// Requested opening lies outside [aperture(alpha_min), aperture(alpha_max)].
class UnreachableAperture : public DomainError {
 public:
  UnreachableAperture(double opening, double lo, double hi, const std::string& what)
      : DomainError("opening", what), opening_(opening), lo_(lo), hi_(hi) {}
  double opening() const noexcept { return opening_; }
  double min_opening() const noexcept { return lo_; }
  double max_opening() const noexcept { return hi_; }

 private:
  double opening_;
  double lo_;
  double hi_;
};

/// Malformed CSV/JSON input. line() is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + field + ": " + what),
        line_(line),
        field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// Well-formed input that violates a dataset invariant (duplicates, forbidden values).
class IntegrityError : public Error {
 public:
  IntegrityError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidTransition : public Error {
 public:
  using Error::Error;
};

/// No trials exist to fit the rotation predictor for the requested viewpoint.
class UnavailableModel : public Error {
 public:
  using Error::Error;
};

/// A referenced input file does not exist.
class InputNotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace avogrip
