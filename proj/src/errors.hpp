#pragma once

#include <stdexcept>
#include <string>

namespace qa {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: parse errors, invalid parameters, zero coefficients.
struct input_error : error {
    using error::error;
};

// A documented precondition does not hold (non-squarefree polynomial,
// endpoint is a root, field not totally real, ...).
struct precondition_error : error {
    using error::error;
};

// A bounded search ran to exhaustion without a hit. Never a nonexistence claim.
struct search_exhausted : error {
    using error::error;
};

// The factorization degree cap was exceeded. Loud by design: beyond the cap
// we refuse to answer rather than risk a wrong answer.
struct degree_cap_error : precondition_error {
    using precondition_error::precondition_error;
};

} // namespace qa
