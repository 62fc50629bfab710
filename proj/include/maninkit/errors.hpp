#pragma once

#include <stdexcept>
#include <string>

namespace maninkit {

// Caller-supplied data is unusable: mismatched fields, bad shapes, malformed
// fixture text, tables that fail their load-time checks.  The CLI maps this
// family to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatchError : public InputError {
public:
    using InputError::InputError;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

class ValidationError : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, int line, int column)
        : InputError(msg + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

// An enumeration request exceeds the configured candidate budget.  The CLI
// maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An invariant of the engine itself failed; reaching this is a bug, not a
// property of the input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace maninkit
