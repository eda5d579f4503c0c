#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aspen {

struct SyntaxError : std::runtime_error {
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& symbol)
        : std::runtime_error("inconsistent arity for symbol '" + symbol + "'"),
          symbol(symbol) {}
    std::string symbol;
};

struct UnsafeRule : std::runtime_error {
    UnsafeRule(std::size_t rule_index, const std::string& variable)
        : std::runtime_error("unsafe rule " + std::to_string(rule_index) +
                             ": variable '" + variable +
                             "' has no positive body occurrence"),
          rule_index(rule_index),
          variable(variable) {}
    std::size_t rule_index;
    std::string variable;
};

struct ResourceExceeded : std::runtime_error {
    explicit ResourceExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aspen
