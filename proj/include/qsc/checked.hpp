#pragma once

#include <cstdint>
#include <stdexcept>

namespace qsc {

// Raised when a coefficient or intermediate value leaves the 64-bit range.
// Silent wraparound is never acceptable in exact computations.
struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("qsc: 64-bit integer overflow") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError{};
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError{};
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError{};
    return out;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

}  // namespace qsc
