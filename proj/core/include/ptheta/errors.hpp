#pragma once

#include <stdexcept>
#include <string>

namespace ptheta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed decimal input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument outside the region where an operation is defined (|q| >= 1, k < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested tolerance cannot be met at the current working precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Argument tracking failed on every perturbed contour.
class ContourError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A double zero degenerated further (vanishing second derivative).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class PathError : public Error {
 public:
  using Error::Error;
};

class FlowError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ptheta
