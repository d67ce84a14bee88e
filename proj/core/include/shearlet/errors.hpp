#pragma once

#include <stdexcept>
#include <string>

namespace shearlet {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument is outside its mathematical domain (negative level, shear out of range, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Array dimensions do not match what an operation requires.
struct ShapeError : Error {
    using Error::Error;
};

/// A run configuration is inconsistent (schedule length, iteration count, ...).
struct ConfigError : Error {
    using Error::Error;
};

/// A bundled data asset is missing or fails its checksum.
struct AssetError : Error {
    using Error::Error;
};

/// A file or byte stream does not match the expected format.
struct FormatError : Error {
    using Error::Error;
};

/// The frame weight is (numerically) singular; dual filters cannot be formed.
struct SingularFrameError : Error {
    using Error::Error;
};

/// Grid too small for a filter bank to be meaningful.
struct UnsupportedSizeError : Error {
    using Error::Error;
};

/// Inpainting mask observes no pixels at all.
struct DegenerateMaskError : Error {
    using Error::Error;
};

/// Separation quality reference carries no energy.
struct DegenerateTruthError : Error {
    using Error::Error;
};

} // namespace shearlet
