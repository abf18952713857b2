#ifndef LENZLAB_ERRORS_HPP
#define LENZLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lenzlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested an exact cosine/chord outside the Q(sqrt5)-representable angle set.
struct UnsupportedExactAngle : Error {
    using Error::Error;
};

// Exact comparison between a Cartesian point and a symbolic point whose
// carrier plane the Cartesian point touches.
struct MixedRepresentation : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Lenz system radii do not satisfy r_i^2 + r_j^2 = lambda^2.
struct ConstraintViolation : Error {
    using Error::Error;
};

struct SpreadTooLarge : Error {
    using Error::Error;
};

// Fresh-angle allocation ran out of supported positions.
struct PlacementExhausted : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// A strict numeric comparison stayed undecided at the precision ceiling.
struct PrecisionExhausted : Error {
    using Error::Error;
};

} // namespace lenzlab

#endif
