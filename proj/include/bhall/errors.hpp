#pragma once

#include <stdexcept>
#include <string>

namespace bhall {

struct bhall_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured budget. Callers see the would-be
// count before any work is done.
struct budget_exceeded : bhall_error {
    using bhall_error::bhall_error;
};

// Malformed user input (quiver files, CLI expressions, bad parameters).
struct invalid_input : bhall_error {
    using bhall_error::bhall_error;
};

// A structural invariant failed; indicates a bug, not bad input.
struct internal_error : bhall_error {
    using bhall_error::bhall_error;
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

inline void check_input(bool ok, const std::string& what) {
    if (!ok) throw invalid_input(what);
}

}  // namespace bhall
