#pragma once

#include <stdexcept>
#include <string>

namespace plumbcert {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NotNegativeDefinite : Error {
    using Error::Error;
};

struct Disconnected : Error {
    using Error::Error;
};

struct IrrationalMagnitudeRoot : Error {
    using Error::Error;
};

struct DegenerateMap : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct NotMinimal : Error {
    using Error::Error;
};

/// An edge joins two vertices that both have discrepancy -1; the gluing
/// system has no solution there.
struct AdjacentMinusOnes : Error {
    using Error::Error;
};

/// A discrepancy -1 vertex with positive genus or valency outside {1,2};
/// no normal form is available for it.
struct MinusOneOutOfScope : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct BadParams : Error {
    using Error::Error;
};

} // namespace plumbcert
