#pragma once

#include <stdexcept>
#include <string>

namespace tf {

// Base class for all library failures. `code()` is a stable machine-parsable
// tag used by the CLI for exit diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("parse", "line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error("convergence", what) {}
};

class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& what) : Error("geometry", what) {}
};

}  // namespace tf
