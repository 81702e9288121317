#pragma once

#include <stdexcept>
#include <string>

namespace sysc {

// Source position, 1-based. line == 0 means "no position".
struct SourcePos {
    int line = 0;
    int col = 0;
};

// Syntax-level failure; always carries a position inside the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, SourcePos pos)
        : std::runtime_error(std::move(msg)), pos(pos) {}
    SourcePos pos;
};

// Malformed design: undeclared names, bad directives, missing reverse
// transform, non-dividing tile factors, unknown gallery keys, and so on.
// CLI maps these to exit code 2.
class DesignError : public std::runtime_error {
public:
    DesignError(std::string code, std::string msg)
        : std::runtime_error(std::move(msg)), code(std::move(code)) {}
    std::string code;
};

// A transform that is well-formed but rejected by the availability or
// injectivity checks. CLI maps these to exit code 1.
class ValidityError : public std::runtime_error {
public:
    ValidityError(std::string code, std::string msg)
        : std::runtime_error(std::move(msg)), code(std::move(code)) {}
    std::string code;
};

// Runtime failures during evaluation or simulation (poison reads, output
// collisions, missing outputs). CLI maps these to exit code 1.
class SimError : public std::runtime_error {
public:
    SimError(std::string code, std::string msg)
        : std::runtime_error(std::move(msg)), code(std::move(code)) {}
    std::string code;
};

}  // namespace sysc
