#pragma once

#include <stdexcept>
#include <string>

namespace annetto {

// Base error for all library failures: malformed input, misuse of the
// builder API, schema inconsistencies.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A construct that is recognized but deliberately outside the supported subset.
class UnsupportedError : public ParseError {
public:
    UnsupportedError(int line, int column, const std::string& feature)
        : ParseError(line, column, "unsupported feature: " + feature), feature_(feature) {}

    const std::string& feature() const { return feature_; }

private:
    std::string feature_;
};

}  // namespace annetto
