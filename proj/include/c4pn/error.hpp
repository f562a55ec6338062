#pragma once

// Internal invariant violations: a strategy table that lacks a winning move
// for a reachable node, contraction arithmetic that fails its audit, and
// similar "cannot happen" conditions.  The CLI maps this exception to a
// dedicated exit code so corrupted state is distinguishable from ordinary
// verification failures and configuration errors.

#include <stdexcept>

namespace c4pn {

struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace c4pn
