#pragma once

#include <stdexcept>
#include <string>

namespace pmf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched index sets / matrix dimensions.
struct DimensionError : Error { using Error::Error; };

// Malformed user input (bad partition, bad lattice point, bad JSON value).
struct InputError : Error { using Error::Error; };

// A configured size budget was exceeded (exit code 3 in the CLI).
struct BudgetError : Error { using Error::Error; };

// A documented precondition between modules was violated.
struct ContractError : Error { using Error::Error; };

// Heights admit a tie on the lower envelope; message names a tying tree pair.
struct DegenerateHeightsError : Error { using Error::Error; };

struct InvalidTriangulationError : Error { using Error::Error; };

struct UnsupportedRankError : Error { using Error::Error; };

// Rational matrix has deficient rank.
struct RankError : Error { using Error::Error; };

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error { using Error::Error; };

}  // namespace pmf
