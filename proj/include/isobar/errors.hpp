#pragma once

#include <stdexcept>
#include <string>

namespace isobar {

// Input text that does not conform to a file format.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid map or operation argument.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive ceiling or node budget was reached before the computation
// could produce an exact answer.  Distinct from a negative result.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace isobar
