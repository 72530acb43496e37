#pragma once

#include <stdexcept>
#include <string>

namespace mvlaw {

/// Malformed input: bad algebra tables, syntax errors, unknown symbols.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured resource budget (enumeration size, recursion depth) was exceeded.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace mvlaw
