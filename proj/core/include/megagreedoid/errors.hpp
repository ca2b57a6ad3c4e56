#pragma once

#include <stdexcept>
#include <string>

namespace mg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally broken input: unknown labels, missing ranks, bad masks.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// An operation that needs a feasible set was handed one outside the family.
class InfeasibleSet : public Error {
 public:
  using Error::Error;
};

class LabelCollision : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

// Candidate family/rank data fails a megagreedoid axiom.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class InvalidPoset : public Error {
 public:
  using Error::Error;
};

class InvalidGreedoid : public Error {
 public:
  using Error::Error;
};

class InvalidPolymatroid : public Error {
 public:
  using Error::Error;
};

class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// The greedy facet order failed to be a shelling. Not recoverable.
class ShellingFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace mg
