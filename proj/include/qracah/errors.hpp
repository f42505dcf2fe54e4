#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qracah {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural mismatch between operand shapes (matrix dims, ambient dims).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A parameter set violates the admissibility rules. Carries the full list of
// violations so callers can report all of them at once.
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg,
                            std::vector<std::string> violations = {})
        : Error(msg), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// Request to invert a singular square matrix. Carries the exact rank.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& msg, int rank)
        : Error(msg), rank_(rank) {}

    int rank() const { return rank_; }

private:
    int rank_;
};

// An affine system A x = b has no solution.
class NoSolutionError : public Error {
public:
    using Error::Error;
};

// Admissible parameters that nevertheless break a genericity assumption
// needed downstream (coinciding eigenvalues, collapsed eigenspaces, broken
// split-sum identities). The message carries the diagnosis.
class DegenerateParameters : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent run configuration (CLI / JSON level).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace qracah
