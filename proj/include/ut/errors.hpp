#pragma once

#include <stdexcept>

namespace ut {

// Operands whose shapes do not fit the operation.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameter values outside the admissible set (zero where nonzero is
// required, length mismatches, unknown variants).
struct ConstraintError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requests the implementation deliberately refuses (documented limits).
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ut
