#pragma once

#include <cstdint>
#include <numeric>

#include "dioph/error.hpp"

namespace dioph {

using i64 = std::int64_t;

// All arithmetic in the library goes through these helpers.  Inputs are tiny
// in practice, but a wrapped product silently corrupts a class group, so
// wrapping is promoted to a hard error instead.

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "addition overflows 64 bits");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "subtraction overflows 64 bits");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "multiplication overflows 64 bits");
    return r;
}

/// lcm of two positive integers, overflow-checked.
inline i64 checked_lcm(i64 a, i64 b) {
    const i64 g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

} // namespace dioph
