#pragma once

#include <stdexcept>
#include <string>

namespace starsylv {

// Base of every error the library raises. Operations whose failure is a
// legitimate mathematical outcome (an inconsistent solve, a refuted witness)
// report it through their return value instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct InvalidStarMode : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct NonConformalBlocks : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Carries the 1-based position of the offending token.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

struct Char2Rejected : Error {
    using Error::Error;
};

struct Char2Unsupported : Error {
    using Error::Error;
};

struct NotASolution : Error {
    using Error::Error;
};

struct InvalidWitness : Error {
    using Error::Error;
};

struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

struct ProbeDisabled : Error {
    using Error::Error;
};

}  // namespace starsylv
