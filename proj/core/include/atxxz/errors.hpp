#pragma once

#include <stdexcept>
#include <string>

namespace atxxz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested size exceeds what the library is willing to allocate.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Invalid or mutually inconsistent arguments.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An operator maps a state out of its symmetry-restricted basis.
class SectorViolation : public Error {
 public:
  using Error::Error;
};

/// A density matrix or state fails its numerical invariants.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Inputs to an analytic formula do not describe a physical state.
class InconsistentInputs : public Error {
 public:
  using Error::Error;
};

/// An expectation that should be symmetric across species is not.
class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace atxxz
