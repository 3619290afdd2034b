#pragma once

#include <stdexcept>

namespace xm {

// 64-bit arithmetic with overflow escalation. Desk-scale inputs never get
// near the bound, so an overflow is treated as a hard error rather than
// silently wrapping.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

}  // namespace xm
