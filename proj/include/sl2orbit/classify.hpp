#pragma once

#include <sl2orbit/finitegroups.hpp>
#include <sl2orbit/hwproduct.hpp>
#include <sl2orbit/subalgebra.hpp>
#include <sl2orbit/toric.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2orbit {

struct ClassLabel {
    enum class Kind { Homogeneous, SphericalCone, QF };
    Kind kind = Kind::Homogeneous;
    std::string subgroup;  // Homogeneous: SL2, T, N_T, mu_f, D_f, E6, E7, E8
    Rational q = 0;        // QF only
    long f = 0;            // SphericalCone and QF
    std::string stabilizer;

    static ClassLabel homogeneous(std::string subgroup_name) {
        ClassLabel label;
        label.kind = Kind::Homogeneous;
        label.stabilizer = subgroup_name;
        label.subgroup = std::move(subgroup_name);
        return label;
    }

    static ClassLabel spherical_cone(long f) {
        ClassLabel label;
        label.kind = Kind::SphericalCone;
        label.f = f;
        label.stabilizer = "mu_" + std::to_string(f) + " ltimes Ubar";
        return label;
    }

    static ClassLabel qf(Rational q, long f) {
        ClassLabel label;
        label.kind = Kind::QF;
        label.q = std::move(q);
        label.f = f;
        label.stabilizer = "mu_" + std::to_string(f);
        return label;
    }

    friend bool operator==(const ClassLabel& x, const ClassLabel& y) {
        return x.kind == y.kind && x.subgroup == y.subgroup && x.q == y.q && x.f == y.f;
    }
};

inline constexpr uint64_t default_classify_seed = 0x5eed5eed5eedULL;

// Transcendence degree of the generated subalgebra: 0, 1 or 2. Monomial
// presentations use the exponent lattice rank (exact); general ones use the
// Jacobian rank at random points (three independent draws, take the max --
// rank can only drop on a proper closed locus).
inline int krull_dimension(const GradedAlgebraPresentation& algebra,
                           uint64_t seed = default_classify_seed) {
    if (algebra.generators.empty()) return 0;
    if (algebra.all_monomial()) {
        std::vector<LatticePoint> points;
        for (const auto& g : algebra.generators) {
            int i = g.top_index();
            points.push_back({i, g.degree() - i});
        }
        return Lattice2::span(points).rank;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> draw(2, 1L << 20);
    int best = 0;
    for (int trial = 0; trial < 3; ++trial) {
        Rational a(draw(rng)), b(draw(rng));
        ExactRowSpace space(2);
        for (const auto& g : algebra.generators) {
            std::vector<Rational> row{g.d_da().evaluate(a, b), g.d_db().evaluate(a, b)};
            space.insert(row);
        }
        best = std::max(best, space.rank());
    }
    return best;
}

// Kills the subleading coefficient of a dominant single-generator
// presentation by a lower-unipotent right translation (the z = z_{m-1}/m
// elimination). Non-applicable shapes pass through unchanged.
inline GradedAlgebraPresentation normalize_dominant(const GradedAlgebraPresentation& algebra) {
    if (algebra.generators.size() != 1) return algebra;
    HomPoly2 p = algebra.generators.front().monic();
    int m = p.top_index();
    if (m == 0) return algebra;  // already a pure b-power
    Rational z = p.coeff(m - 1) / Rational(m);
    if (z != 0) p = right_translate(p, lower_unipotent(-z));
    return GradedAlgebraPresentation({p.monic()}, algebra.degree_bound);
}

// f = gcd over the Hilbert basis of (j - i); requires rank 2 and a vertical
// generator (0, j), i.e. a dominance-normalized semigroup.
inline long extract_f(const Semigroup2D& s) {
    if (semigroup_rank(s) != 2) throw std::invalid_argument("semigroup must have rank 2");
    bool has_vertical = false;
    long f = 0;
    for (const auto& p : s.hilbert_generators) {
        has_vertical = has_vertical || (p.i == 0);
        f = gcd_long(f, p.j - p.i);
    }
    if (!has_vertical) throw std::invalid_argument("b-power missing; not dominance-normalized");
    return f == 0 ? 1 : f;
}

namespace detail {

// Matches the per-degree point counts of the full-quadrant semigroup against
// the series of a catalog group at the detected f (TypeA, then TypeD).
inline ClassLabel match_full_quadrant(const Semigroup2D& s, int fingerprint_degree = 16) {
    long f = 0;
    for (const auto& p : s.hilbert_generators) f = gcd_long(f, p.j - p.i);
    if (f == 0) f = 1;
    std::vector<long> counts(fingerprint_degree + 1, 0);
    for (long d = 0; d <= fingerprint_degree; ++d)
        for (long i = 0; i <= d; ++i)
            if (member(s, {i, d - i})) ++counts[d];
    for (GroupLabel label : {GroupLabel::TypeA, GroupLabel::TypeD}) {
        FiniteSubgroup group = catalog(label, f);
        if (molien_coefficients(group, fingerprint_degree) == counts)
            return ClassLabel::homogeneous(group.name());
    }
    throw std::invalid_argument("full-quadrant series matches no catalog group at f = " +
                                std::to_string(f));
}

}  // namespace detail

inline ClassLabel classify(const Semigroup2D& s) {
    int rank = semigroup_rank(s);
    if (rank < 2) throw std::invalid_argument("semigroup input must have rank 2");
    if (!is_saturated(s)) throw std::invalid_argument("not normal");
    auto [v1, v2] = extremal_rays(s);
    if (v1 == LatticePoint{1, 0} && v2 == LatticePoint{0, 1}) return detail::match_full_quadrant(s);
    if (!(v2 == LatticePoint{0, 1}))
        throw std::invalid_argument("vertical extremal ray missing; not dominance-normalized");
    long f = extract_f(s);
    Rational q = rat(v1.j, v1.i);
    if (q < 1) throw std::invalid_argument("cone slope below 1 after normalization");
    return ClassLabel::qf(q, f);
}

inline ClassLabel classify(const GradedAlgebraPresentation& algebra,
                           uint64_t seed = default_classify_seed) {
    if (algebra.generators.empty()) return ClassLabel::homogeneous("SL2");
    int dim = krull_dimension(algebra, seed);
    if (dim == 0) return ClassLabel::homogeneous("SL2");

    if (dim == 1) {
        // Reduce to the minimal-degree generator; the rest must be its powers.
        HomPoly2 p = algebra.generators.front();
        for (const auto& g : algebra.generators)
            if (g.degree() < p.degree()) p = g;
        GradedAlgebraPresentation single({p.monic()}, algebra.degree_bound);
        for (const auto& g : algebra.generators)
            if (!contains(single, g))
                throw std::invalid_argument("dimension-1 input is not generated by one element");
        GradedAlgebraPresentation normalized = normalize_dominant(single);
        const HomPoly2& gen = normalized.generators.front();
        if (!is_dominant(gen)) throw std::invalid_argument("generator is not dominance-normalized");
        int n = gen.degree();
        if (gen == HomPoly2::monomial(0, n)) return ClassLabel::spherical_cone(n);
        if (gen == HomPoly2::monomial(1, 1)) return ClassLabel::homogeneous("T");
        if (gen == HomPoly2::monomial(2, 2)) return ClassLabel::homogeneous("N_T");
        AdmissibilityReport report = check_admissible(normalized);
        if (report.verdict == AdmissibilityReport::Verdict::fail)
            throw std::invalid_argument("input is not admissible: w-vector of degree " +
                                        std::to_string(report.witness->w.degree()) +
                                        " at s = " + std::to_string(report.witness->s) +
                                        " escapes the algebra");
        throw std::invalid_argument("dimension-1 generator matches no classified normal form");
    }

    if (!algebra.all_monomial())
        throw std::invalid_argument("apply weight-component extraction first");
    // Dominance of the generators is not enforced here: the full-quadrant
    // homogeneous case is exempt, and the semigroup route below rejects any
    // other non-normalized cone by its missing vertical ray.
    std::vector<LatticePoint> points;
    for (const auto& g : algebra.generators) {
        int i = g.top_index();
        points.push_back({i, g.degree() - i});
    }
    Semigroup2D s = semigroup_from_points(points);
    auto [v1, v2] = extremal_rays(s);
    bool full_quadrant = v1 == LatticePoint{1, 0} && v2 == LatticePoint{0, 1};
    if (!full_quadrant) {
        AdmissibilityReport report = monomial_admissible(s, algebra.degree_bound);
        if (report.verdict != AdmissibilityReport::Verdict::pass)
            throw std::invalid_argument("input is not admissible: target exponent (" +
                                        std::to_string(report.witness->w.top_index()) + ", " +
                                        std::to_string(report.witness->w.degree() -
                                                       report.witness->w.top_index()) +
                                        ") leaves the semigroup");
    }
    return classify(s);
}

// The recursive weight-component descent: peel each generator into its
// monomial summands by repeated w-vectors against b^{2f'} (f' = f, or f/2
// when f is even), then reduce the collected exponents to the Hilbert basis
// of their saturation. Requires b^f in the algebra and support inside
// k[a^f, b^f, ab].
inline GradedAlgebraPresentation weight_component_closure(const GradedAlgebraPresentation& algebra) {
    GradedPieces pieces(algebra);
    long f = 0;
    for (int d = 1; d <= algebra.degree_bound; ++d) {
        if (pieces.contains(HomPoly2::monomial(0, d))) {
            f = d;
            break;
        }
    }
    if (f == 0) throw std::invalid_argument("no pure b-power found below the degree bound");
    for (const auto& g : algebra.generators) {
        int n = g.degree();
        for (int i = 0; i <= n; ++i)
            if (g.coeff(i) != 0 && (n - 2 * i) % f != 0)
                throw std::invalid_argument("generator support leaves the f-sublattice");
    }

    long f_prime = (f % 2 == 0) ? f / 2 : f;
    HomPoly2 pf = HomPoly2::monomial(0, static_cast<int>(2 * f_prime));

    std::vector<LatticePoint> points;
    for (const auto& g : algebra.generators) {
        HomPoly2 q = g.monic();
        while (true) {
            int m = q.top_index();
            points.push_back({m, q.degree() - m});
            if (q.is_monomial()) break;
            // Non-monomial support spaced by f' forces m >= f'.
            HomPoly2 w = w_vector(q, pf, static_cast<int>(f_prime));
            // Leading coefficient has the binom(m,f)/binom(n,f) ratio form,
            // nonzero by the alternating-sum identity; guarded anyway.
            Rational lead = w.coeff(m - static_cast<int>(f_prime));
            if (lead == 0) throw std::logic_error("vanishing leading coefficient in descent");
            q = (Rational(1) / lead) * w;
        }
    }

    std::vector<LatticePoint> reduced = saturation_hilbert_basis(points);
    std::vector<HomPoly2> generators;
    for (const auto& p : reduced)
        generators.push_back(HomPoly2::monomial(static_cast<int>(p.i), static_cast<int>(p.j)));
    return GradedAlgebraPresentation(std::move(generators), algebra.degree_bound);
}

}  // namespace sl2orbit
