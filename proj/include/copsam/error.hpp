#pragma once

#include <stdexcept>
#include <string>

namespace copsam {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad caller-supplied value (out-of-range timestep, lambda outside [0,1], ...).
struct ArgumentError : Error {
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Model/config shape disagreement.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Non-finite values encountered mid-computation.
struct NumericalError : Error {
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Token not present in the vocabulary table.
struct VocabularyError : Error {
    explicit VocabularyError(const std::string& msg) : Error(msg) {}
};

// Operation called on an object in the wrong state (empty stack, missing param).
struct StateError : Error {
    explicit StateError(const std::string& msg) : Error(msg) {}
};

// Degenerate numeric input (zero-norm attention map).
struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& msg) : Error(msg) {}
};

// A command was run before the artifact it depends on exists.
struct PrerequisiteError : Error {
    explicit PrerequisiteError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace copsam
