#pragma once

#include <stdexcept>

namespace crossfam {

/// An operation was called on input outside its stated contract.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A constructed object failed its post-construction check
/// (e.g. a coloring procedure produced an improper coloring).
struct VerificationFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact search refuted a bound that is guaranteed to hold for the
/// given input class. Never swallowed: it signals either an
/// implementation bug or a counterexample to the guarantee.
struct InternalContradictionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A solver exceeded its configured search-node budget.
struct BudgetExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace crossfam
