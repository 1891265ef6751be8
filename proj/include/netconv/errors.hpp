#pragma once

#include <stdexcept>
#include <string>

namespace netconv {

// Thrown when an element fails family validation (arity mismatch, coordinate
// out of range, ...).
class invalid_element_error : public std::invalid_argument {
public:
    explicit invalid_element_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Thrown when an enumeration would exceed a configured element cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Expression-language syntax or type error, with a deterministic position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Expression evaluation error (division by zero, overflow, ...).
class eval_error : public std::runtime_error {
public:
    explicit eval_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace netconv
