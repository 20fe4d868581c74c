#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace aszeta {

// Bad user input (malformed spec file, reducible modulus, d = 0, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The request is well-formed but exceeds a configured resource bound.
// Refusals are always explicit; nothing is silently truncated.
struct feasibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant failed.  These are not recoverable: they mean the
// computation itself went wrong, so callers must not catch and continue.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

[[noreturn]] inline void check_fail(const char* expr, const char* file, int line,
                                    const std::string& msg) {
    std::ostringstream os;
    os << "invariant violated: " << expr << " at " << file << ":" << line;
    if (!msg.empty()) os << " (" << msg << ")";
    throw internal_error(os.str());
}

} // namespace aszeta

// Always-on invariant check; never compiled out.
#define ASZ_CHECK(cond)                                                        \
    do {                                                                       \
        if (!(cond)) ::aszeta::check_fail(#cond, __FILE__, __LINE__, "");      \
    } while (0)

#define ASZ_CHECK_MSG(cond, msg)                                               \
    do {                                                                       \
        if (!(cond)) ::aszeta::check_fail(#cond, __FILE__, __LINE__, (msg));   \
    } while (0)
