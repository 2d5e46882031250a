#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No element of the requested multiplicative order exists in the field.
struct NoSuchOrder : Error {
  using Error::Error;
};

// Operands belong to structurally different fields.
struct FieldMismatch : Error {
  using Error::Error;
};

// Precondition violated: bad parameter, family hypothesis, parse failure.
struct InvalidArgument : Error {
  using Error::Error;
};

// Query outside the computed degree range.
struct DegreeRange : Error {
  using Error::Error;
};

// Request exceeds a hard size guard (tensor power too large, etc).
struct SizeGuard : Error {
  using Error::Error;
};

}  // namespace nichols
