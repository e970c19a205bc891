#pragma once

#include <stdexcept>
#include <string>

namespace starq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// series
struct OrderMismatch : Error {
  using Error::Error;
};
struct DivisionByNonUnit : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct NonUnitConstantTerm : Error {
  using Error::Error;
};
struct PointOutsideCap : Error {
  using Error::Error;
};

// special
struct ThetaTooClose : Error {
  using Error::Error;
};

// membership
struct ZeroOfF : Error {
  using Error::Error;
};

// shared parameter validation
struct InvalidParams : Error {
  using Error::Error;
};

// radii: thrown only when a guaranteed root cannot be isolated; message
// carries the scan trace.
struct NoRootError : Error {
  using Error::Error;
};

}  // namespace starq
