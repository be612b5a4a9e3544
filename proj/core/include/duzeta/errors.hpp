#pragma once

#include <stdexcept>
#include <string>

namespace duzeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact
struct NonPrimeModulus : Error { using Error::Error; };
struct NotPIntegral : Error { using Error::Error; };

// poly / series
struct OrderExceeded : Error { using Error::Error; };
struct NonUnitSeries : Error { using Error::Error; };

// group
struct CapExceeded : Error { using Error::Error; };
struct NonRealResult : Error { using Error::Error; };

// enumerator
struct UnsupportedDegree : Error { using Error::Error; };
struct NoLeadingTerm : Error { using Error::Error; };
struct NoMinimumDistance : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

// zeta
struct SingularSystem : Error { using Error::Error; };
struct TruncationResidue : Error { using Error::Error; };
struct InexactDivision : Error { using Error::Error; };
struct ExclusionMismatch : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct ExcludedPrime : Error { using Error::Error; };
struct UnitCheckFailed : Error { using Error::Error; };

} // namespace duzeta
