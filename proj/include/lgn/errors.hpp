#pragma once

#include <stdexcept>
#include <string>

namespace lgn {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

/// Quasistatic solver failure (CLI exit code 3).
struct SolverError : Error {
    SolverError(const std::string& msg, int step_index = -1)
        : Error(msg), step(step_index) {}
    int step;
};

struct NonConvergence : SolverError {
    using SolverError::SolverError;
};

struct SingularSystem : SolverError {
    using SolverError::SolverError;
};

/// Artifact mismatch: format versions, checksums, architecture shapes (exit code 4).
struct ArtifactError : Error {
    using Error::Error;
};

/// Filesystem / serialization failure (exit code 5).
struct IoError : Error {
    using Error::Error;
};

/// Geometry that cannot be meshed (zero-length strut, flat tet).
struct DegenerateGeometry : Error {
    using Error::Error;
};

/// Element with non-positive rest or deformed volume where that is fatal.
struct InvertedElement : Error {
    using Error::Error;
};

}  // namespace lgn
