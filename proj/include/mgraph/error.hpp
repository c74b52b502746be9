#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mgraph {

// Malformed input: bad files, out-of-range indices, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
  InputError(const std::string& what, int line)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 0 when the error is not tied to a line of a text file.
  int line() const noexcept { return line_; }

 private:
  int line_ = 0;
};

// A bounded computation ran out of its node, time or size budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mgraph
