#pragma once

#include <stdexcept>
#include <string>

namespace pexmap {

// Error codes shared with the C API (see include/pexmap/pexmap.h).
enum class ErrorCode : int {
    ok = 0,
    invalid_argument = 1,
    domain = 2,           // point outside the admissible domain
    null_set = 3,         // point on a branch boundary (map undefined)
    no_preimage = 4,      // requested branch has no preimage at this point
    hypothesis = 5,       // constants violate an admissibility constraint
    numeric = 6,          // evaluation failure (NaN, overflow, breakdown)
    no_converge = 7,      // iteration exceeded its budget
    degenerate = 8,       // degenerate input (empty cell, zero density, ...)
    insufficient_data = 9,
    io = 10,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace pexmap
