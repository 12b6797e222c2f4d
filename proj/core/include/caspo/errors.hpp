#pragma once

#include <stdexcept>
#include <string>

namespace caspo {

// Error taxonomy mirrored by the CLI exit codes: validation -> 1,
// I/O -> 2, invariant violation -> 3.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a metric is mathematically undefined for the given input
// (e.g. AUC with a single class present).
struct UndefinedResultError : ValidationError {
    using ValidationError::ValidationError;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace caspo
