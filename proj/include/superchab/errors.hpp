#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace superchab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition on the inputs does not hold (zero where a unit is
// required, p | m, disc with too many branch points, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Working precision is too low to decide the requested quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// One or more named hypotheses of a bound theorem fail for the input curve.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(std::vector<std::string> violated);
  const std::vector<std::string>& violated() const { return violated_; }

 private:
  std::vector<std::string> violated_;
};

// An internal consistency check failed (chart identity, counting cap, ...).
class VerificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace superchab
