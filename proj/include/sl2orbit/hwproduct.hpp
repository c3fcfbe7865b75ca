#pragma once

#include <sl2orbit/binomial.hpp>
#include <sl2orbit/hompoly.hpp>
#include <sl2orbit/sl2action.hpp>

#include <stdexcept>
#include <vector>

namespace sl2orbit {

// Highest-weight components of the product of the modules generated by two
// homogeneous polynomials p1, p2 in k[a,b].
struct ProductDecomposition {
    HomPoly2 p1, p2;
    // (s, w_s) for s = 0 .. min(n1, n2); w_s may be zero.
    std::vector<std::pair<int, HomPoly2>> components;
};

/// Coefficient y_{alpha,s} of the weight-(n1+n2-2s) highest-weight component:
//   sum_{i+j=alpha} sum_{e=0..s} (-1)^e binom(s,e) / (binom(n1,e) binom(n2,s-e))
//                   * binom(n1-i,e) binom(n2-j,s-e) z1_i z2_j.
inline Rational y_coeff(const HomPoly2& p1, const HomPoly2& p2, int alpha, int s) {
    if (p1.is_zero() || p2.is_zero()) throw std::invalid_argument("inputs must be nonzero");
    int n1 = p1.degree(), n2 = p2.degree();
    if (s < 0 || s > std::min(n1, n2)) throw std::out_of_range("s out of range");
    if (alpha < s || alpha > n1 + n2 - s) throw std::out_of_range("alpha out of range");
    Rational total = 0;
    for (int i = std::max(0, alpha - n2); i <= std::min(alpha, n1); ++i) {
        int j = alpha - i;
        Rational z = p1.coeff(i) * p2.coeff(j);
        if (z == 0) continue;
        Rational inner = 0;
        for (int e = 0; e <= s; ++e) {
            Rational den = binom(n1, e) * binom(n2, s - e);
            Rational term = binom(s, e) * binom(n1 - i, e) * binom(n2 - j, s - e) / den;
            if (e % 2 != 0) term = -term;
            inner += term;
        }
        total += z * inner;
    }
    return total;
}

// w_s = sum_alpha y_{alpha,s} a^{alpha-s} b^{n1+n2-alpha-s}; degree n1+n2-2s.
inline HomPoly2 w_vector(const HomPoly2& p1, const HomPoly2& p2, int s) {
    if (p1.is_zero() || p2.is_zero()) throw std::invalid_argument("inputs must be nonzero");
    int n1 = p1.degree(), n2 = p2.degree();
    if (s < 0 || s > std::min(n1, n2)) throw std::out_of_range("s out of range");
    int degree = n1 + n2 - 2 * s;
    std::vector<Rational> z(degree + 1, Rational(0));
    for (int alpha = s; alpha <= n1 + n2 - s; ++alpha) z[alpha - s] = y_coeff(p1, p2, alpha, s);
    bool any = false;
    for (const auto& c : z) any = any || (c != 0);
    return any ? HomPoly2(degree, std::move(z)) : HomPoly2();
}

inline ProductDecomposition decompose_product(const HomPoly2& p1, const HomPoly2& p2) {
    if (p1.is_zero() || p2.is_zero()) throw std::invalid_argument("inputs must be nonzero");
    ProductDecomposition result{p1, p2, {}};
    int bound = std::min(p1.degree(), p2.degree());
    for (int s = 0; s <= bound; ++s) result.components.emplace_back(s, w_vector(p1, p2, s));
    return result;
}

namespace detail {

/// Independent route to mult(v_s): the tensor-formula expansion
//   v_s = sum_e (-1)^e binom(s,e) <-e>v1 (x) <-(s-e)>v2
// followed by multiplying the two legs inside k[SL2] (free ring, then
// normal form for comparison).
inline Poly4 tensor_oracle_image(const HomPoly2& p1, const HomPoly2& p2, int s) {
    Poly4 v1 = Poly4::from_hompoly(p1);
    Poly4 v2 = Poly4::from_hompoly(p2);
    Poly4 image;
    for (int e = 0; e <= s; ++e) {
        Rational sign_binom = binom(s, e);
        if (e % 2 != 0) sign_binom = -sign_binom;
        image = image + sign_binom * (lower(v1, e) * lower(v2, s - e));
    }
    return image;
}

// The closed-form route: m(v_s) = sum_alpha y_{alpha,s} (ad-bc)^s
// a^{alpha-s} b^{n1+n2-alpha-s}.
inline Poly4 coefficient_formula_image(const HomPoly2& p1, const HomPoly2& p2, int s) {
    Poly4 det_power = Poly4::constant(1);
    Poly4 det = Poly4::monomial(1, 0, 0, 1) - Poly4::monomial(0, 1, 1, 0);
    for (int t = 0; t < s; ++t) det_power = det_power * det;
    int n1 = p1.degree(), n2 = p2.degree();
    Poly4 image;
    for (int alpha = s; alpha <= n1 + n2 - s; ++alpha) {
        Rational y = y_coeff(p1, p2, alpha, s);
        if (y == 0) continue;
        image = image + y * (det_power * Poly4::monomial(alpha - s, n1 + n2 - alpha - s, 0, 0));
    }
    return image;
}

}  // namespace detail

// Checks, for every s, that the coefficient-formula image of v_s agrees with
// the tensor/lowering oracle image in the free ring on a, b, c, d.
inline bool verify_cg_embedding(const HomPoly2& p1, const HomPoly2& p2) {
    if (p1.is_zero() || p2.is_zero()) throw std::invalid_argument("inputs must be nonzero");
    int bound = std::min(p1.degree(), p2.degree());
    for (int s = 0; s <= bound; ++s) {
        if (detail::tensor_oracle_image(p1, p2, s) != detail::coefficient_formula_image(p1, p2, s))
            return false;
    }
    return true;
}

}  // namespace sl2orbit
