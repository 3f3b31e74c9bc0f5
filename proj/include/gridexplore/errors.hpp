#pragma once

#include <stdexcept>
#include <string>

namespace gridexplore {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Map files and generated worlds.
struct MapFormatError : Error {
    using Error::Error;
};

// key = value experiment config files.
struct ConfigError : Error {
    using Error::Error;
};

// Tensor / network shape violations.
struct ShapeError : Error {
    using Error::Error;
};

// Checkpoint parsing: bad magic, version, truncation, checksum.
struct CheckpointError : Error {
    using Error::Error;
};

// Checkpoint variant does not match the requested network variant.
struct VariantMismatchError : CheckpointError {
    using CheckpointError::CheckpointError;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace gridexplore
