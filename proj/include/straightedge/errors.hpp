#pragma once

#include <stdexcept>
#include <string>

namespace straightedge {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph construction and addressing.
struct IndexOutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct ZeroLengthEdge : Error { using Error::Error; };
struct InvalidPointRef : Error { using Error::Error; };

// Distance computation.
struct BudgetExceeded : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };

// Piecewise metrics and integration.
struct SameEdge : Error { using Error::Error; };
struct NonPositiveDenominator : Error { using Error::Error; };
struct BranchUndefined : Error { using Error::Error; };

struct QuadratureNonConvergence : Error {
  QuadratureNonConvergence(const std::string& what, double achieved)
      : Error(what), achieved_error(achieved) {}
  double achieved_error;
};

// Generators.
struct DegenerateConfiguration : Error { using Error::Error; };

// File I/O.
struct ParseError : Error { using Error::Error; };
struct MissingCoordinateAttribute : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

}  // namespace straightedge
