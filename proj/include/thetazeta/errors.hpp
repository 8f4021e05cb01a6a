#pragma once

#include <stdexcept>
#include <string>

namespace thetazeta {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Bad configuration (precision out of range, unknown model label, ...).
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Evaluation requested at (or numerically at) a pole.
struct PoleError : DomainError {
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// Division by a value indistinguishable from zero (e.g. zeta near a zero).
struct NearZeroError : DomainError {
    explicit NearZeroError(const std::string& msg) : DomainError(msg) {}
};

// Bracket handed to the zero refiner does not contain a zero.
struct NotAZeroError : Error {
    explicit NotAZeroError(const std::string& msg) : Error(msg) {}
};

// Not enough trustworthy coefficients (noise floor ate the expansion).
struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& msg) : Error(msg) {}
};

// Resource limits: memory estimate exceeded, file unwritable, ...
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// Cache file exists but is malformed or fails its checksum.
struct FormatError : ResourceError {
    explicit FormatError(const std::string& msg) : ResourceError(msg) {}
};

// Cache file has an unrecognised version stamp.
struct VersionError : ResourceError {
    explicit VersionError(const std::string& msg) : ResourceError(msg) {}
};

}  // namespace thetazeta
