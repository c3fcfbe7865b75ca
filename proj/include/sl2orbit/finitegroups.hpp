#pragma once

#include <sl2orbit/binomial.hpp>
#include <sl2orbit/cyclotomic.hpp>
#include <sl2orbit/hompoly.hpp>
#include <sl2orbit/linalg.hpp>
#include <sl2orbit/sl2action.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2orbit {

enum class GroupLabel { TypeA, TypeD, E6, E7, E8 };

inline std::string group_label_name(GroupLabel label, long f) {
    switch (label) {
        case GroupLabel::TypeA: return "mu_" + std::to_string(f);
        case GroupLabel::TypeD: return "D_" + std::to_string(f);
        case GroupLabel::E6: return "E6";
        case GroupLabel::E7: return "E7";
        case GroupLabel::E8: return "E8";
    }
    throw std::logic_error("unreachable");
}

using CycMatrix2 = Matrix2<Cyclotomic>;

struct FiniteSubgroup {
    GroupLabel label = GroupLabel::TypeA;
    long f = 1;  // meaningful for TypeA/TypeD only
    long conductor = 1;
    std::vector<CycMatrix2> generators;
    std::vector<CycMatrix2> elements;

    long order() const { return static_cast<long>(elements.size()); }
    std::string name() const { return group_label_name(label, f); }
};

namespace detail {

struct MatrixKey {
    bool operator()(const CycMatrix2& x, const CycMatrix2& y) const {
        if (x.e00 < y.e00 || y.e00 < x.e00) return x.e00 < y.e00;
        if (x.e01 < y.e01 || y.e01 < x.e01) return x.e01 < y.e01;
        if (x.e10 < y.e10 || y.e10 < x.e10) return x.e10 < y.e10;
        return x.e11 < y.e11;
    }
};

inline CycMatrix2 promote(const CycMatrix2& m, long conductor) {
    return CycMatrix2{m.e00.promoted(conductor), m.e01.promoted(conductor),
                      m.e10.promoted(conductor), m.e11.promoted(conductor)};
}

// Breadth-first closure under multiplication; generators must have
// determinant 1 (checked). Capped to catch malformed generator input.
inline std::vector<CycMatrix2> enumerate_closure(const std::vector<CycMatrix2>& generators,
                                                 long conductor) {
    constexpr long cap = 10000;
    Cyclotomic one(Rational(1), conductor);
    Cyclotomic zero_c(Rational(0), conductor);
    CycMatrix2 identity{one, zero_c, zero_c, one};
    std::map<CycMatrix2, bool, MatrixKey> seen;
    std::vector<CycMatrix2> frontier{identity};
    seen.emplace(identity, true);
    std::vector<CycMatrix2> gens;
    for (const auto& g : generators) {
        CycMatrix2 p = promote(g, conductor);
        if (!(p.det() == one)) throw std::invalid_argument("generator determinant is not 1");
        gens.push_back(p);
    }
    while (!frontier.empty()) {
        std::vector<CycMatrix2> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                CycMatrix2 prod = m * g;
                if (seen.emplace(prod, true).second) {
                    next.push_back(prod);
                    if (static_cast<long>(seen.size()) > cap)
                        throw std::runtime_error("group closure exceeded the element cap");
                }
            }
        frontier = std::move(next);
    }
    std::vector<CycMatrix2> elements;
    for (const auto& [m, unused] : seen) elements.push_back(m);
    return elements;
}

}  // namespace detail

inline FiniteSubgroup catalog(GroupLabel label, long f = 0) {
    FiniteSubgroup group;
    group.label = label;
    auto rational_entry = [](long num, long den, long conductor) {
        return Cyclotomic(rat(num, den), conductor);
    };

    switch (label) {
        case GroupLabel::TypeA:
        case GroupLabel::TypeD: {
            if (f < 1) throw std::invalid_argument("f must be a positive integer");
            group.f = f;
            group.conductor = f;
            Cyclotomic z = Cyclotomic::root(f);
            Cyclotomic zero_c(Rational(0), f);
            group.generators.push_back(CycMatrix2{z.pow(f - 1), zero_c, zero_c, z});
            if (label == GroupLabel::TypeD) {
                // The Weyl element; squares to -identity inside SL2.
                group.generators.push_back(CycMatrix2{zero_c, rational_entry(-1, 1, f),
                                                      rational_entry(1, 1, f), zero_c});
            }
            break;
        }
        case GroupLabel::E6:
        case GroupLabel::E7: {
            group.conductor = 8;
            Cyclotomic eps = Cyclotomic::root(8);
            Cyclotomic zero_c(Rational(0), 8);
            Cyclotomic minus_one(Rational(-1), 8);
            Cyclotomic one(Rational(1), 8);
            // 1/sqrt(2) = (eps + eps^7)/2 in the conductor-8 field.
            Cyclotomic inv_sqrt2 = Cyclotomic(rat(1, 2), 8) * (eps + eps.pow(7));
            group.generators.push_back(CycMatrix2{zero_c, minus_one, one, zero_c});
            group.generators.push_back(CycMatrix2{minus_one, zero_c, zero_c, minus_one});
            group.generators.push_back(CycMatrix2{inv_sqrt2 * eps.pow(7), inv_sqrt2 * eps.pow(7),
                                                  inv_sqrt2 * eps.pow(5), inv_sqrt2 * eps});
            if (label == GroupLabel::E7)
                group.generators.push_back(CycMatrix2{eps, zero_c, zero_c, eps.pow(7)});
            break;
        }
        case GroupLabel::E8: {
            group.conductor = 20;
            Cyclotomic eta = Cyclotomic::root_power(20, 4);  // primitive 5th root
            Cyclotomic zero_c(Rational(0), 20);
            group.generators.push_back(
                CycMatrix2{-eta.pow(3), zero_c, zero_c, -eta.pow(2)});
            Cyclotomic scale = (eta.pow(2) - eta.pow(3)).inverse();
            Cyclotomic tau = eta + eta.pow(4);
            group.generators.push_back(CycMatrix2{scale * tau, scale * Cyclotomic(Rational(1), 20),
                                                  scale * Cyclotomic(Rational(1), 20),
                                                  scale * (-tau)});
            break;
        }
    }
    group.elements = detail::enumerate_closure(group.generators, group.conductor);
    return group;
}

// Coefficients 0..degree_bound of (1/|H|) sum_g 1/det(1 - t g). Each summand
// is 1/(1 - trace(g) t + t^2) since det(g) = 1, expanded by the two-term
// recurrence c_k = trace * c_{k-1} - c_{k-2}.
inline std::vector<long> molien_coefficients(const FiniteSubgroup& group, int degree_bound) {
    if (group.elements.empty()) throw std::invalid_argument("group has no elements");
    std::vector<Cyclotomic> total(degree_bound + 1, Cyclotomic(Rational(0), group.conductor));
    for (const auto& g : group.elements) {
        Cyclotomic trace = g.e00 + g.e11;
        Cyclotomic prev(Rational(0), group.conductor);
        Cyclotomic curr(Rational(1), group.conductor);
        for (int k = 0; k <= degree_bound; ++k) {
            total[k] = total[k] + curr;
            Cyclotomic next = trace * curr - prev;
            prev = curr;
            curr = next;
        }
    }
    std::vector<long> result(degree_bound + 1);
    Rational order(group.order());
    for (int k = 0; k <= degree_bound; ++k) {
        Rational value = total[k].rational_value() / order;  // throws if not rational
        if (!is_integer(value) || value < 0)
            throw std::logic_error("series coefficient is not a nonnegative integer");
        result[k] = to_long(value);
    }
    return result;
}

namespace detail {

// Image coefficients of a^u b^v under the right action of g, as a vector of
// cyclotomic coefficients indexed by the a-exponent of a^x b^{d-x}.
inline std::vector<Cyclotomic> act_on_monomial(const CycMatrix2& g, int u, int v, long conductor) {
    // a -> g00 a + g10 b, b -> g01 a + g11 b.
    int d = u + v;
    std::vector<Cyclotomic> image(d + 1, Cyclotomic(Rational(0), conductor));
    std::vector<Cyclotomic> p00(u + 1, Cyclotomic(Rational(1), conductor));
    std::vector<Cyclotomic> p10(u + 1, Cyclotomic(Rational(1), conductor));
    std::vector<Cyclotomic> p01(v + 1, Cyclotomic(Rational(1), conductor));
    std::vector<Cyclotomic> p11(v + 1, Cyclotomic(Rational(1), conductor));
    for (int t = 1; t <= u; ++t) {
        p00[t] = p00[t - 1] * g.e00;
        p10[t] = p10[t - 1] * g.e10;
    }
    for (int t = 1; t <= v; ++t) {
        p01[t] = p01[t - 1] * g.e01;
        p11[t] = p11[t - 1] * g.e11;
    }
    for (int t1 = 0; t1 <= u; ++t1)
        for (int t2 = 0; t2 <= v; ++t2) {
            // Contribution to a^{(u-t1)+(v-t2)} b^{t1+t2}.
            Cyclotomic coeff = Cyclotomic(binom(u, t1) * binom(v, t2), conductor) * p00[u - t1] *
                               p10[t1] * p01[v - t2] * p11[t2];
            int x = (u - t1) + (v - t2);
            image[x] = image[x] + coeff;
        }
    return image;
}

}  // namespace detail

// Basis of degree-d invariants of the right action: Reynolds averaging of
// each monomial, then exact row reduction. Averages of a full group action
// must come out rational; asserted.
inline std::vector<HomPoly2> reynolds_invariants(const FiniteSubgroup& group, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    Rational inv_order = Rational(1) / Rational(group.order());
    ExactRowSpace space(d + 1);
    for (int u = 0; u <= d; ++u) {
        std::vector<Cyclotomic> average(d + 1, Cyclotomic(Rational(0), group.conductor));
        for (const auto& g : group.elements) {
            auto image = detail::act_on_monomial(g, u, d - u, group.conductor);
            for (int x = 0; x <= d; ++x) average[x] = average[x] + image[x];
        }
        std::vector<Rational> row(d + 1);
        bool nonzero = false;
        for (int x = 0; x <= d; ++x) {
            row[x] = average[x].rational_value() * inv_order;  // throws if not rational
            nonzero = nonzero || (row[x] != 0);
        }
        if (nonzero) space.insert(row);
    }
    std::vector<HomPoly2> result;
    for (const auto& row : space.basis()) result.emplace_back(d, std::vector<Rational>(row));
    return result;
}

}  // namespace sl2orbit
