#pragma once

#include <sl2orbit/hompoly.hpp>
#include <sl2orbit/rational.hpp>

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace sl2orbit {

// Exponents of a^i b^j c^k d^l.
using Exponent4 = std::array<int, 4>;

// Sparse polynomial in a, b, c, d. Arithmetic is free-ring arithmetic;
// normal_form() rewrites modulo ad - bc = 1 (basis: monomials with i = 0
// or l = 0). Values are not auto-normalized so the free ring stays usable.
class Poly4 {
public:
    Poly4() = default;

    static Poly4 monomial(int i, int j, int k, int l, Rational coeff = 1) {
        if (i < 0 || j < 0 || k < 0 || l < 0) throw std::invalid_argument("negative exponent");
        Poly4 p;
        p.add_term({i, j, k, l}, std::move(coeff));
        return p;
    }

    static Poly4 constant(Rational c) { return monomial(0, 0, 0, 0, std::move(c)); }

    static Poly4 from_hompoly(const HomPoly2& p) {
        Poly4 result;
        if (p.is_zero()) return result;
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coeff(i) != 0) result.add_term({i, p.degree() - i, 0, 0}, p.coeff(i));
        return result;
    }

    const std::map<Exponent4, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponent4& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponent4& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Poly4 operator+(const Poly4& x, const Poly4& y) {
        Poly4 r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }

    friend Poly4 operator-(const Poly4& x, const Poly4& y) {
        Poly4 r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
        return r;
    }

    friend Poly4 operator*(const Rational& s, const Poly4& p) {
        Poly4 r;
        if (s == 0) return r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
        return r;
    }

    friend Poly4 operator*(const Poly4& x, const Poly4& y) {
        Poly4 r;
        for (const auto& [e1, c1] : x.terms_)
            for (const auto& [e2, c2] : y.terms_) {
                Exponent4 e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    friend bool operator==(const Poly4& x, const Poly4& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Poly4& x, const Poly4& y) { return !(x == y); }

    bool involves_only_ab() const {
        for (const auto& [e, c] : terms_)
            if (e[2] != 0 || e[3] != 0) return false;
        return true;
    }

    bool is_normal() const {
        for (const auto& [e, c] : terms_)
            if (e[0] > 0 && e[3] > 0) return false;
        return true;
    }

private:
    std::map<Exponent4, Rational> terms_;
};

// Rewrite ad -> 1 + bc until no term contains both a and d. Confluent
// single-rule system, so the result is the unique normal form.
inline Poly4 normal_form(const Poly4& raw) {
    Poly4 result;
    for (const auto& [e, c] : raw.terms()) {
        int r = std::min(e[0], e[3]);  // number of ad pairs to rewrite
        if (r == 0) {
            result.add_term(e, c);
            continue;
        }
        // (ad)^r = (1 + bc)^r; expand binomially.
        Rational bc_binom = 1;
        for (int t = 0; t <= r; ++t) {
            Exponent4 reduced{e[0] - r, e[1] + t, e[2] + t, e[3] - r};
            result.add_term(reduced, c * bc_binom);
            bc_binom *= rat(r - t, t + 1);
        }
    }
    if (!result.is_normal()) return normal_form(result);
    return result;
}

inline Poly4 multiply(const Poly4& x, const Poly4& y) { return normal_form(x * y); }

// Splits a polynomial supported on a, b into homogeneous layers (ascending
// degree, empty layers omitted).
inline std::vector<HomPoly2> total_degree_components(const Poly4& p) {
    if (!p.involves_only_ab()) throw std::invalid_argument("polynomial must involve only a, b");
    std::map<int, std::vector<Rational>> layers;
    for (const auto& [e, c] : p.terms()) {
        int n = e[0] + e[1];
        auto& z = layers[n];
        z.resize(n + 1, Rational(0));
        z[e[0]] = c;
    }
    std::vector<HomPoly2> result;
    for (auto& [n, z] : layers) {
        z.resize(n + 1, Rational(0));
        result.emplace_back(n, std::move(z));
    }
    return result;
}

inline HomPoly2 to_hompoly(const Poly4& p) {
    auto layers = total_degree_components(p);
    if (layers.empty()) return HomPoly2();
    if (layers.size() > 1) throw std::invalid_argument("polynomial is not homogeneous");
    return layers.front();
}

}  // namespace sl2orbit
