#pragma once

#include <stdexcept>
#include <string>

namespace gridfloer {

// Malformed input (bad file, bad flag). CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Valid input, but the requested operation is not possible on it.
// CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPermutation : ParseError {
    using ParseError::ParseError;
};

struct OverlappingMarkings : ParseError {
    using ParseError::ParseError;
};

struct SameComponent : DomainError {
    using DomainError::DomainError;
};

struct InvalidComponent : DomainError {
    using DomainError::DomainError;
};

struct LastComponent : DomainError {
    using DomainError::DomainError;
};

struct GridTooLarge : DomainError {
    using DomainError::DomainError;
};

// Exact polynomial division failed. Signals a computation bug upstream;
// must never fire on ranks produced by the homology pipeline.
struct NotDivisible : DomainError {
    using DomainError::DomainError;
};

// The chain-level action failed to commute with the differential.
// Signals an implementation bug; must never fire.
struct NotChainMap : DomainError {
    using DomainError::DomainError;
};

struct DimensionTooLarge : DomainError {
    using DomainError::DomainError;
};

struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};

struct EmptyErosion : DomainError {
    using DomainError::DomainError;
};

// Erosion produced a polytope with non-integer vertices; it cannot be a
// lattice Minkowski summand.
struct NonLatticeErosion : DomainError {
    using DomainError::DomainError;
};

}  // namespace gridfloer
