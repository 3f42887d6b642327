#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turingflow {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an operation's inputs was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An operation was called in a state where it is not defined
/// (e.g. objective normalization not yet established).
class InvalidState : public Error {
public:
    using Error::Error;
};

/// An iterative solver failed to reach its tolerance. Carries the
/// residual history for diagnostics.
class ConvergenceFailure : public Error {
public:
    ConvergenceFailure(const std::string& what, std::vector<double> history)
        : Error(what), residual_history(std::move(history)) {}

    std::vector<double> residual_history;
};

/// Non-finite values were produced during a computation.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// A degenerate field could not be binarized into a pattern.
class BinarizationFailure : public Error {
public:
    using Error::Error;
};

/// Pattern geometry is unusable (e.g. inlet and outlet are not connected).
/// Carries the sizes of the orphaned fluid regions found.
class InvalidGeometry : public Error {
public:
    InvalidGeometry(const std::string& what, std::vector<std::size_t> orphans)
        : Error(what), orphan_region_sizes(std::move(orphans)) {}

    std::vector<std::size_t> orphan_region_sizes;
};

/// Configuration file problem; names the offending key and line.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::string key, int line)
        : Error(what + " (key '" + key + "', line " + std::to_string(line) + ")"),
          key(std::move(key)),
          line(line) {}

    std::string key;
    int line = 0;
};

/// A pipeline stage was started without its required inputs on disk.
class StageInputError : public Error {
public:
    using Error::Error;
};

}  // namespace turingflow
