#pragma once

#include <sl2orbit/rational.hpp>

namespace sl2orbit {

// Falling factorial n(n-1)...(n-k+1) over k!, valid for any integer n.
// Zero when k < 0, and when 0 <= n < k.
inline Rational binom(long n, long k) {
    if (k < 0) return 0;
    Rational result = 1;
    for (long t = 0; t < k; ++t) {
        result *= rat(n - t, t + 1);
    }
    return result;
}

inline Integer factorial(long n) {
    Integer result = 1;
    for (long t = 2; t <= n; ++t) result *= t;
    return result;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

}  // namespace sl2orbit
