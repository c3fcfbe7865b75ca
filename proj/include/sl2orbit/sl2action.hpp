#pragma once

#include <sl2orbit/binomial.hpp>
#include <sl2orbit/poly4.hpp>

#include <stdexcept>
#include <vector>

namespace sl2orbit {

template <typename Scalar>
struct Matrix2 {
    // [[e00, e01], [e10, e11]]
    Scalar e00, e01, e10, e11;

    Scalar det() const { return e00 * e11 - e01 * e10; }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return Matrix2{x.e00 * y.e00 + x.e01 * y.e10, x.e00 * y.e01 + x.e01 * y.e11,
                       x.e10 * y.e00 + x.e11 * y.e10, x.e10 * y.e01 + x.e11 * y.e11};
    }

    friend bool operator==(const Matrix2& x, const Matrix2& y) {
        return x.e00 == y.e00 && x.e01 == y.e01 && x.e10 == y.e10 && x.e11 == y.e11;
    }

    // Adjugate; equals the inverse when det = 1.
    Matrix2 inverse_det1() const { return Matrix2{e11, -e01, -e10, e00}; }
};

using GroupElement2 = Matrix2<Rational>;

inline GroupElement2 identity_element() { return GroupElement2{1, 0, 0, 1}; }

// Lower-unipotent [[1,0],[z,1]]; right translation by it maps ab + z b^2 to ab
// when z is chosen as the subleading ratio (the normalization move).
inline GroupElement2 lower_unipotent(const Rational& z) { return GroupElement2{1, 0, z, 1}; }

inline void require_det_one(const GroupElement2& g) {
    if (g.det() != 1) throw std::invalid_argument("matrix must have determinant 1");
}

// Left torus weight: +1 for a, b; -1 for c, d. Right torus weight: +1 for
// b, d; -1 for a, c. Weight vectors are homogeneous for both gradings.
struct WeightVector {
    Poly4 value;
    int left_weight = 0;
    int right_weight = 0;
};

inline int left_weight_of(const Exponent4& e) { return e[0] + e[1] - e[2] - e[3]; }
inline int right_weight_of(const Exponent4& e) { return e[1] + e[3] - e[0] - e[2]; }

inline WeightVector make_weight_vector(const Poly4& p) {
    if (p.is_zero()) throw std::invalid_argument("zero is not a weight vector");
    WeightVector v;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            v.left_weight = left_weight_of(e);
            v.right_weight = right_weight_of(e);
            first = false;
        } else if (left_weight_of(e) != v.left_weight || right_weight_of(e) != v.right_weight) {
            throw std::invalid_argument("value is not bi-homogeneous for the torus gradings");
        }
    }
    v.value = p;
    return v;
}

// The drop operator <-e>v: expand v(a + xc, b + xd, c, d), take the x^e
// coefficient, divide by binom(n, e) where n is the left weight. Returns
// zero when e > n.
inline Poly4 lower(const Poly4& v, int e) {
    if (e < 0) throw std::invalid_argument("lowering index must be nonnegative");
    if (v.is_zero()) return Poly4();
    if (e == 0) return v;
    int n = left_weight_of(v.terms().begin()->first);
    for (const auto& [ex, c] : v.terms())
        if (left_weight_of(ex) != n)
            throw std::invalid_argument("value is not homogeneous for the left torus grading");
    if (e > n) return Poly4();
    Poly4 coeff_xe;
    for (const auto& [ex, c] : v.terms()) {
        for (int t1 = 0; t1 <= std::min(e, ex[0]); ++t1) {
            int t2 = e - t1;
            if (t2 > ex[1]) continue;
            Rational factor = c * binom(ex[0], t1) * binom(ex[1], t2);
            coeff_xe.add_term({ex[0] - t1, ex[1] - t2, ex[2] + t1, ex[3] + t2}, factor);
        }
    }
    Rational norm = binom(n, e);
    if (norm == 0) {
        if (!coeff_xe.is_zero())
            throw std::logic_error("nonzero orbit coefficient with vanishing normalizer");
        return Poly4();
    }
    return (Rational(1) / norm) * coeff_xe;
}

inline WeightVector lower(const WeightVector& v, int e) {
    Poly4 dropped = lower(v.value, e);
    if (dropped.is_zero()) return WeightVector{Poly4(), v.left_weight - 2 * e, v.right_weight};
    return make_weight_vector(dropped);
}

// Substitute each coordinate by its value at x.g: a -> g00 a + g10 b,
// b -> g01 a + g11 b, c -> g00 c + g10 d, d -> g01 c + g11 d. Composition
// satisfies translate(.,g) after translate(.,h) = translate(., h.g).
inline Poly4 right_translate(const Poly4& p, const GroupElement2& g) {
    require_det_one(g);
    Poly4 image_a = Poly4::monomial(1, 0, 0, 0, g.e00) + Poly4::monomial(0, 1, 0, 0, g.e10);
    Poly4 image_b = Poly4::monomial(1, 0, 0, 0, g.e01) + Poly4::monomial(0, 1, 0, 0, g.e11);
    Poly4 image_c = Poly4::monomial(0, 0, 1, 0, g.e00) + Poly4::monomial(0, 0, 0, 1, g.e10);
    Poly4 image_d = Poly4::monomial(0, 0, 1, 0, g.e01) + Poly4::monomial(0, 0, 0, 1, g.e11);
    Poly4 result;
    for (const auto& [e, c] : p.terms()) {
        Poly4 term = Poly4::constant(c);
        for (int t = 0; t < e[0]; ++t) term = term * image_a;
        for (int t = 0; t < e[1]; ++t) term = term * image_b;
        for (int t = 0; t < e[2]; ++t) term = term * image_c;
        for (int t = 0; t < e[3]; ++t) term = term * image_d;
        result = result + term;
    }
    return result;
}

inline HomPoly2 right_translate(const HomPoly2& p, const GroupElement2& g) {
    if (p.is_zero()) return p;
    return to_hompoly(right_translate(Poly4::from_hompoly(p), g));
}

// Splits p by right torus weight (n - 2i for a^i b^{n-i}); descending weight.
inline std::vector<std::pair<int, HomPoly2>> right_weight_components(const HomPoly2& p) {
    std::vector<std::pair<int, HomPoly2>> result;
    if (p.is_zero()) return result;
    int n = p.degree();
    for (int i = 0; i <= n; ++i)
        if (p.coeff(i) != 0) result.emplace_back(n - 2 * i, HomPoly2::monomial(i, n - i, p.coeff(i)));
    return result;
}

// Support lies on or above the diagonal: i <= n - i for every monomial.
inline bool is_dominant(const HomPoly2& p) {
    if (p.is_zero()) return true;
    int n = p.degree();
    for (int i = 0; i <= n; ++i)
        if (p.coeff(i) != 0 && i > n - i) return false;
    return true;
}

// Basis (v_s) of the module generated by the monomial a^{i_m} b^{j_m}:
// v_s = sum_{i+j=s} binom(i_m,i) binom(j_m,j) a^{i_m-i} c^i b^{j_m-j} d^j,
// in normal form, for s = 0 .. i_m + j_m.
inline std::vector<Poly4> module_basis(int i_m, int j_m) {
    if (i_m < 0 || j_m < 0) throw std::invalid_argument("negative exponent");
    std::vector<Poly4> basis;
    for (int s = 0; s <= i_m + j_m; ++s) {
        Poly4 v;
        for (int i = 0; i <= std::min(s, i_m); ++i) {
            int j = s - i;
            if (j > j_m) continue;
            v.add_term({i_m - i, j_m - j, i, j}, binom(i_m, i) * binom(j_m, j));
        }
        basis.push_back(normal_form(v));
    }
    return basis;
}

}  // namespace sl2orbit
