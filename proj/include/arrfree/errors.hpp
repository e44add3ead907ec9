#ifndef ARRFREE_ERRORS_HPP
#define ARRFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arrfree {

// Bad user input: malformed text, inconsistent dimensions, unknown names.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically refused request: a hypothesis gate failed (e.g. reducing
// modulo a non-good prime). Distinct from input_error for scripting.
struct refusal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invariant violation inside the library. Always a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace arrfree

#endif
