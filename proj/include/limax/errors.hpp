#pragma once

#include <stdexcept>
#include <string>

namespace limax {

/// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when persisted or supplied data is internally inconsistent.
class CorruptionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the experiment pipeline when an upstream stage's artifact is missing.
class DependencyError : public std::runtime_error {
public:
    DependencyError(std::string stage, const std::string& what)
        : std::runtime_error(what), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

} // namespace limax
