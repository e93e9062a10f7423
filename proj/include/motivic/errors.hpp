#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: bad lengths, missing fields, broken context invariants.
struct InvalidInput : Error {
    using Error::Error;
};

// Series inversion requires an invertible constant coefficient.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

// exp of a log-count series produced a fractional coefficient.
struct NonIntegralCoefficient : Error {
    using Error::Error;
};

// Sym/ext dimension counts are only defined for honest (nonnegative) dimensions.
struct NegativeDimension : Error {
    using Error::Error;
};

// Leading-term extraction needs the product of weight and dimension to be even.
struct OddProduct : Error {
    using Error::Error;
};

// Brute-force enumeration would exceed its hard size limits.
struct SizeGuardExceeded : Error {
    using Error::Error;
};

// Symmetric power of a symbol with no declared expansion rule.
struct MissingRule : Error {
    using Error::Error;
};

// Counting specialization hit a symbol without an assigned count.
struct UnassignedSymbol : Error {
    using Error::Error;
};

// Periodicity check has no index left to verify at this horizon.
struct HorizonTooSmall : Error {
    using Error::Error;
};

}  // namespace motivic
