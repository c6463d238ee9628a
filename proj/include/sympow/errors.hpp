#pragma once

#include <stdexcept>
#include <string>

namespace sympow {

/// Malformed data: mismatched exponent-vector lengths, bad syntax,
/// exponent overflow. Never raised by a mathematically valid input.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation applied outside its mathematical domain, e.g. a
/// decomposition of the zero or unit ideal.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured cap (cell count, node budget, iteration limit) was hit.
/// The computation was abandoned; the partial state is discarded, so a
/// resource_error never stands in for a wrong answer.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace sympow
