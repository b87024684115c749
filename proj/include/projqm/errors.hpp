// errors.hpp - exception hierarchy for invariant violations
#pragma once

#include <stdexcept>
#include <string>

namespace projqm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Operands live in spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A would-be representative has no amplitude above the zero tolerance.
class AllZero : public Error {
 public:
  using Error::Error;
};

/// A superposition cancelled to the zero vector.
class ZeroResult : public Error {
 public:
  using Error::Error;
};

/// The requested chart's pivot amplitude vanishes at this point.
class ZeroPivot : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

/// Unitary, but the determinant is not 1.
class NotSpecialUnitary : public NotUnitary {
 public:
  using NotUnitary::NotUnitary;
};

/// An operator annihilated the state, so no image point exists.
class KernelState : public Error {
 public:
  using Error::Error;
};

/// A vector that must have unit length does not.
class NotUnit : public Error {
 public:
  using Error::Error;
};

}  // namespace projqm
