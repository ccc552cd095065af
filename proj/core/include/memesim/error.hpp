#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace memesim {

/// Base of every error the library throws. `reason()` is a short
/// machine-readable slug (e.g. "degenerate-response") suitable for logs
/// and exit-status messages.
class Error : public std::runtime_error {
public:
    Error(std::string reason, const std::string& message)
        : std::runtime_error(message), reason_(std::move(reason)) {}

    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// Invalid configuration. Carries every offending field, not just the first.
class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<std::string> fields, const std::string& detail = {});

    const std::vector<std::string>& fields() const noexcept { return fields_; }

private:
    std::vector<std::string> fields_;
};

/// Bad argument to a pure operation (non-finite feature, probability out of range, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& message) : Error("invalid-input", message) {}
};

/// Malformed log line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string token, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::string token_;
};

class SingularDesignError : public Error {
public:
    explicit SingularDesignError(const std::string& message) : Error("singular-design", message) {}
};

class UndefinedRSquaredError : public Error {
public:
    explicit UndefinedRSquaredError(const std::string& message)
        : Error("r-squared-undefined", message) {}
};

class DegenerateResponseError : public Error {
public:
    explicit DegenerateResponseError(const std::string& message)
        : Error("degenerate-response", message) {}
};

}  // namespace memesim
