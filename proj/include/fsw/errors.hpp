#pragma once

#include <stdexcept>
#include <string>

namespace fsw {

// Error taxonomy for the pipeline. All arithmetic is exact, so failures are
// structural (bad input, exhausted search bound, broken invariant), never
// numerical.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Characteristic of a field must be prime.
struct NonPrimeCharacteristic : Error {
    using Error::Error;
};

// A configured search/size bound was exceeded (field size, degree cap,
// enumeration box).
struct BoundExceeded : Error {
    using Error::Error;
};

// Embedding requested between fields that do not sit in one recorded tower.
struct IncompatibleFields : Error {
    using Error::Error;
};

// The vector field is a scalar multiple of the Euler field (zero class).
struct ZeroClassError : Error {
    using Error::Error;
};

// A semigroup point inside the verification window failed to decompose into
// the extracted generators; the enumeration bound was too small.
struct GenerationIncomplete : Error {
    using Error::Error;
};

// Cone rays are linearly dependent where a full-dimensional cone is required.
struct DegenerateCone : Error {
    using Error::Error;
};

// A "cannot happen" condition: an internal cross-check failed, indicating a
// violated precondition upstream.
struct InternalInconsistency : Error {
    using Error::Error;
};

// Malformed input document.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace fsw
