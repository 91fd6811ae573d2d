#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontomcq {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in an ontology document, with 1-based line/column.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : Error(message + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A query referenced an identifier the ontology does not declare.
class UnknownIdentifierError : public Error {
public:
    explicit UnknownIdentifierError(const std::string& identifier)
        : Error("unknown identifier: " + identifier), identifier_(identifier) {}

    const std::string& identifier() const { return identifier_; }

private:
    std::string identifier_;
};

/// An operation's precondition does not hold (e.g. the instance does not
/// satisfy the predicate handed to a popularity query).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Raised when a choice set cannot be filled. Carries how many eligible
/// distractor candidates were actually available.
class InsufficientDistractorsError : public Error {
public:
    InsufficientDistractorsError(std::size_t available, std::size_t needed)
        : Error("insufficient distractors: " + std::to_string(available) +
                " eligible candidate(s), " + std::to_string(needed) + " needed"),
          available_(available),
          needed_(needed) {}

    std::size_t available() const { return available_; }
    std::size_t needed() const { return needed_; }

private:
    std::size_t available_;
    std::size_t needed_;
};

/// Malformed or inconsistent input files (bank JSON, response CSV, alpha CSV).
class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

}  // namespace ontomcq
