#pragma once

#include <stdexcept>
#include <string>

namespace qlie {

// Base class for all engine errors.  The two broad families matter for the
// command-line tool: input errors (bad file, bad name, bad grammar) map to
// exit code 2, computation failures (inconsistent structure, no solution)
// map to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- input-shaped errors -------------------------------------------------
struct InputError : Error {
    using Error::Error;
};
struct ParseError : InputError {
    using InputError::InputError;
};
struct UnknownGeneratorError : InputError {
    using InputError::InputError;
};
struct DuplicateEntryError : InputError {
    using InputError::InputError;
};
struct UnknownBuiltinError : InputError {
    using InputError::InputError;
};
struct BadRequestError : InputError {
    using InputError::InputError;
};

// --- computation failures ------------------------------------------------
struct ComputeError : Error {
    using Error::Error;
};
struct DivisionByZeroError : ComputeError {
    using ComputeError::ComputeError;
};
struct TableIncompleteError : ComputeError {
    using ComputeError::ComputeError;
};
struct SeriesIncompleteError : ComputeError {
    using ComputeError::ComputeError;
};
struct RankMismatchError : ComputeError {
    using ComputeError::ComputeError;
};
struct NoSolutionError : ComputeError {
    using ComputeError::ComputeError;
};
struct NotCentralError : ComputeError {
    using ComputeError::ComputeError;
};
struct NonInvertibleBasisError : ComputeError {
    using ComputeError::ComputeError;
};

} // namespace qlie
