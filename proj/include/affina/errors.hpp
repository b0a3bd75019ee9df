#pragma once

#include <stdexcept>
#include <string>

namespace affina {

// Base class for all validation failures raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularMap : Error {
  using Error::Error;
};

struct InvalidWord : Error {
  using Error::Error;
};

// The map does not preserve the line R x 0.
struct NotLinePreserving : Error {
  using Error::Error;
};

// The element scales the invariant line (r != 1) where pure translation
// is required.
struct ScalesLine : Error {
  using Error::Error;
};

// ker(A - I) is nontrivial, so the shear system has no solution.
struct EigenvalueOne : Error {
  using Error::Error;
};

struct NotAnEigenvector : Error {
  using Error::Error;
};

struct MissingTransition : Error {
  using Error::Error;
};

struct SeamMismatch : Error {
  SeamMismatch(const std::string& msg, int segment, double gap)
      : Error(msg), segment(segment), gap(gap) {}
  int segment;
  double gap;
};

struct NotALoop : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace affina
