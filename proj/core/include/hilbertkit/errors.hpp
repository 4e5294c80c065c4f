#pragma once

#include <stdexcept>
#include <string>

namespace hilbertkit {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input/shape violations. The CLI maps these to exit code 1.
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidDimension : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotUnitaryBasis : Error { using Error::Error; };
struct WrongSpaceTag : Error { using Error::Error; };
struct EmptyFactorList : Error { using Error::Error; };
struct ZeroMatrix : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };
struct NotUnit : Error { using Error::Error; };
struct WeightsNotNormalized : Error { using Error::Error; };
struct DimensionTooSmall : Error { using Error::Error; };
struct InconsistentMeasure : Error { using Error::Error; };
struct EmptyFamily : Error { using Error::Error; };
struct UnsupportedP : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

// Iterative factorization ran out of its sweep budget. CLI exit code 2.
struct NoConvergence : Error { using Error::Error; };

}  // namespace hilbertkit
