#pragma once

#include <sl2orbit/binomial.hpp>

#include <stdexcept>

namespace sl2orbit {

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal;
};

inline IdentityCheck make_check(Rational lhs, Rational rhs) {
    bool eq = (lhs == rhs);
    return IdentityCheck{std::move(lhs), std::move(rhs), eq};
}

// Alternating sum with central-binomial closed form:
//   sum_e (-1)^e C(2i,e) C(j,e) C(j,2i-e) / (C(i+j,e) C(i+j,2i-e))
//     = (-1)^i C(2i,i) / C(i+j,i)^2,  for j >= i >= 0.
inline IdentityCheck verify_central_binomial_sum(long i, long j) {
    if (i < 0 || j < i) throw std::invalid_argument("need 0 <= i <= j");
    Rational lhs = 0;
    for (long e = 0; e <= 2 * i; ++e) {
        Rational den = binom(i + j, e) * binom(i + j, 2 * i - e);
        if (den == 0) continue;
        Rational term = binom(2 * i, e) * binom(j, e) * binom(j, 2 * i - e) / den;
        if (e % 2 != 0) term = -term;
        lhs += term;
    }
    Rational rhs = binom(2 * i, i) / (binom(i + j, i) * binom(i + j, i));
    if (i % 2 != 0) rhs = -rhs;
    return make_check(lhs, rhs);
}

// Quadratic (s = 2) coefficient sum: for m >= 1 and 0 <= i <= m,
//   sum_{e=0}^{2} (-1)^e C(2,e) C(m,e) C(m+i,2-e) / (C(2m,e) C(2m,2-e))
//     = (m i^2 - m^2) / (2 m^2 (2m - 1)).
inline IdentityCheck verify_quadratic_term_sum(long m, long i) {
    if (m < 1 || i < 0 || i > m) throw std::invalid_argument("need m >= 1, 0 <= i <= m");
    long n = 2 * m;
    Rational lhs = 0;
    for (long e = 0; e <= 2; ++e) {
        Rational den = binom(n, e) * binom(n, 2 - e);
        if (den == 0) continue;
        Rational term = binom(2, e) * binom(m, e) * binom(m + i, 2 - e) / den;
        if (e % 2 != 0) term = -term;
        lhs += term;
    }
    Rational rhs = rat(m * i * i - m * m) / rat(2 * m * m * (2 * m - 1));
    return make_check(lhs, rhs);
}

// Chu-Vandermonde style ratio sum:
//   sum_e (-1)^e C(f,e) C(n-m,e) / C(n,e) = C(m,f) / C(n,f),
//   for 0 <= f <= m <= n, n >= 1.
inline IdentityCheck verify_ratio_sum(long f, long m, long n) {
    if (n < 1 || f < 0 || f > m || m > n) throw std::invalid_argument("need 0 <= f <= m <= n, n >= 1");
    Rational lhs = 0;
    for (long e = 0; e <= f; ++e) {
        Rational den = binom(n, e);
        Rational term = binom(f, e) * binom(n - m, e) / den;
        if (e % 2 != 0) term = -term;
        lhs += term;
    }
    Rational rhs = binom(m, f) / binom(n, f);
    return make_check(lhs, rhs);
}

}  // namespace sl2orbit
