#pragma once

#include <stdexcept>
#include <string>

namespace minchar {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value of Z[zeta_n] has no integer representation.
struct NotRationalError : Error { using Error::Error; };

// An operation needing full character values was given a bare degree profile.
struct ProfileOnlyError : Error { using Error::Error; };

// A catalog constructor was given parameters outside its domain.
struct InvalidParametersError : Error { using Error::Error; };

// A catalog name does not resolve to any entry.
struct UnknownNameError : Error { using Error::Error; };

// A Gram matrix fed to reduction or enumeration is not positive definite.
struct NotPositiveDefiniteError : Error { using Error::Error; };

// Enumeration found no nonzero vector inside the given radius.
struct RadiusTooSmallError : Error { using Error::Error; };

// The minimization problem is empty for the one-class group.
struct TrivialGroupError : Error { using Error::Error; };

// A generalized character is an integer multiple of the regular character.
struct MultipleOfRegularError : Error { using Error::Error; };

// Classification needs character values, not just degrees.
struct NeedsFullTableError : Error { using Error::Error; };

// A claimed Frobenius witness fails its pointwise value checks.
struct WitnessFailedError : Error { using Error::Error; };

// A declared maximal degree does not divide the group order.
struct DegreeNotDividingError : Error { using Error::Error; };

// A fusion document is structurally inconsistent with its two tables.
struct InvalidFusionError : Error { using Error::Error; };

// A document could not be parsed into a known format.
struct ParseError : Error { using Error::Error; };

}  // namespace minchar
