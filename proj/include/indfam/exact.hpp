#pragma once

#include <cstdint>
#include <string>

#include "indfam/errors.hpp"

namespace indfam {

// All closed-form cardinalities are evaluated in 128-bit integers with
// overflow checks, so identity tests never silently wrap.
using i128 = __int128;

inline i128 checked_add(i128 a, i128 b) {
    i128 out;
    if (__builtin_add_overflow(a, b, &out))
        throw param_error("exact arithmetic overflow (add)");
    return out;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw param_error("exact arithmetic overflow (mul)");
    return out;
}

// Binomial coefficient; 0 outside the Pascal triangle.
inline i128 binom(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = (r < n - r) ? r : n - r;
    i128 out = 1;
    for (long long i = 1; i <= r; ++i) {
        out = checked_mul(out, n - r + i);
        out /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return out;
}

inline i128 ipow(i128 base, int exp) {
    i128 out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

inline std::string i128_str(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

inline long long to_i64(i128 v) {
    if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
        throw param_error("value does not fit in 64 bits: " + i128_str(v));
    return static_cast<long long>(v);
}

} // namespace indfam
