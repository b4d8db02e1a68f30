#pragma once

#include <stdexcept>
#include <string>

namespace play {

/// Violated precondition or invalid argument in a pure computation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bad or missing configuration: manifests, profiles, CLI wiring.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem or process-level failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace play
