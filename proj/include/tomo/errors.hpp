#pragma once

#include <stdexcept>
#include <string>

namespace tomo {

/// Failure while reading one of the text formats; carries the 1-based line.
struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

/// The original image is required to be uniquely determined (and in
/// canonical form) but is not.
struct UniquenessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |F1| != |F2| where equal sizes are required.
struct SizeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed the desk-scale candidate budget.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tomo
