// Exception taxonomy shared across the library. Each type corresponds to a
// distinct failure mode a caller can act on; the CLI maps them to distinct
// exit codes (see tools/main.cpp and README.md).
#pragma once

#include <stdexcept>

namespace hspsim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number theory.
struct NotInvertible : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NoFactor : Error { using Error::Error; };

// Solvers.
struct BudgetExhausted : Error { using Error::Error; };
struct PromiseViolation : Error { using Error::Error; };
struct InvalidGenerator : Error { using Error::Error; };

// State vectors and operators.
struct NotUnitary : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct ScaleExceeded : Error { using Error::Error; };

// Group plumbing and graph inputs.
struct UnsupportedGroup : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };

}  // namespace hspsim
