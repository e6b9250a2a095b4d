#pragma once

#include <stdexcept>
#include <string>

namespace schatten {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vector or matrix had the wrong dimension for the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An argument violated a documented precondition (bad range, bad enum, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A numerical contract was violated at run time: operator not SPSD,
/// negative accumulated mean, inner solver divergence, and the like.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Inner iterative solve did not reach its tolerance within the iteration cap.
class SolverError : public NumericalError {
public:
    SolverError(const std::string& msg, double final_residual)
        : NumericalError(msg), final_residual(final_residual) {}
    double final_residual;
};

/// Matrix Market ingestion failure. `kind` distinguishes the failure modes so
/// callers and tests can tell them apart without string matching.
class ParseError : public Error {
public:
    enum class Kind {
        io,              // file missing or unreadable
        bad_header,      // malformed or unsupported banner line
        bad_field,       // complex/pattern/integer field where real is required
        bad_format,      // array format, or malformed entry lines
        index_range,     // 1-based index outside [1, rows] x [1, cols]
        not_symmetric,   // general matrix whose content is not symmetric
        not_square,
    };
    ParseError(Kind kind, const std::string& msg) : Error(msg), kind(kind) {}
    Kind kind;
};

}  // namespace schatten
