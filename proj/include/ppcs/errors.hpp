#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppcs {

// Input that violates a file format or a model invariant (exit code 2).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed line in a stream; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& msg)
        : InputError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Lookup of an unknown vertex or attribute (exit code 3).
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller violated a documented precondition (exit code 4).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace ppcs
