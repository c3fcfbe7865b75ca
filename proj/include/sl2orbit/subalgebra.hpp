#pragma once

#include <sl2orbit/hwproduct.hpp>
#include <sl2orbit/linalg.hpp>
#include <sl2orbit/sl2action.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sl2orbit {

// Finitely generated graded subalgebra of k[a,b], presented by homogeneous
// generators plus a degree horizon for all membership computations.
struct GradedAlgebraPresentation {
    std::vector<HomPoly2> generators;
    int degree_bound = 24;

    GradedAlgebraPresentation() = default;

    GradedAlgebraPresentation(std::vector<HomPoly2> gens, int bound)
        : degree_bound(bound) {
        if (bound < 1) throw std::invalid_argument("degree bound must be positive");
        for (auto& g : gens) {
            if (g.is_zero()) throw std::invalid_argument("zero generator");
            if (g.degree() == 0) throw std::invalid_argument("constant generator");
            if (std::find(generators.begin(), generators.end(), g) == generators.end())
                generators.push_back(std::move(g));
        }
    }

    bool all_monomial() const {
        for (const auto& g : generators)
            if (!g.is_monomial()) return false;
        return true;
    }
};

struct AdmissibilityWitness {
    HomPoly2 p1, p2;
    int s = 0;
    HomPoly2 w;
};

struct AdmissibilityReport {
    enum class Verdict { pass, fail, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    long pairs_checked = 0;
    int degree_bound = 0;
    std::optional<AdmissibilityWitness> witness;
    std::string note;  // e.g. the bounded-horizon caveat or a symbolic certificate
};

inline int worker_count() {
    if (const char* env = std::getenv("SL2_ORBIT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

// Degree-by-degree bases of the subalgebra, cached per presentation use.
class GradedPieces {
public:
    explicit GradedPieces(const GradedAlgebraPresentation& algebra) : algebra_(algebra) {}

    // Row-reduced basis of the span of generator products of total degree d.
    const std::vector<HomPoly2>& basis(int d) {
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
        if (d > algebra_.degree_bound) throw std::out_of_range("raise degree_bound");
        if (d == 0)  // the unit is always present
            return cache_.emplace(d, std::vector<HomPoly2>{HomPoly2(0, {Rational(1)})})
                .first->second;
        ExactRowSpace space(d + 1);
        std::vector<HomPoly2> rows;
        HomPoly2 unit;  // multiplicative start: empty product
        enumerate_products(0, d, unit, space, rows);
        std::vector<HomPoly2> reduced;
        for (const auto& vec : space.basis()) {
            std::vector<Rational> z(vec);
            reduced.emplace_back(d, std::move(z));
        }
        return cache_.emplace(d, std::move(reduced)).first->second;
    }

    bool contains(const HomPoly2& p) {
        if (p.is_zero()) return true;
        if (p.degree() > algebra_.degree_bound) throw std::out_of_range("raise degree_bound");
        ExactRowSpace space(p.degree() + 1);
        for (const auto& row : basis(p.degree())) space.insert(row.coefficients());
        return space.contains(p.coefficients());
    }

private:
    void enumerate_products(std::size_t from, int remaining, const HomPoly2& acc,
                            ExactRowSpace& space, std::vector<HomPoly2>& rows) {
        if (remaining == 0) {
            if (!acc.is_zero() && space.insert(acc.coefficients())) rows.push_back(acc);
            return;
        }
        for (std::size_t g = from; g < algebra_.generators.size(); ++g) {
            const HomPoly2& gen = algebra_.generators[g];
            if (gen.degree() > remaining) continue;
            // The zero value stands in for the empty product here.
            HomPoly2 next = acc.is_zero() ? gen : acc * gen;
            enumerate_products(g, remaining - gen.degree(), next, space, rows);
        }
    }

    const GradedAlgebraPresentation& algebra_;
    std::map<int, std::vector<HomPoly2>> cache_;
};

inline std::vector<HomPoly2> graded_piece(const GradedAlgebraPresentation& algebra, int d) {
    GradedPieces pieces(algebra);
    return pieces.basis(d);
}

inline bool contains(const GradedAlgebraPresentation& algebra, const HomPoly2& p) {
    GradedPieces pieces(algebra);
    return pieces.contains(p);
}

// Pair criterion over the graded bases up to the horizon: every
// w-vector of every pair must lie back in the algebra. First violation (in
// lexicographic task order) becomes the witness.
inline AdmissibilityReport check_admissible(const GradedAlgebraPresentation& algebra) {
    GradedPieces pieces(algebra);
    int bound = algebra.degree_bound;

    struct Task {
        int d1, d2, b1, b2, s;
    };
    std::vector<Task> tasks;
    for (int d1 = 1; d1 <= bound; ++d1) {
        const auto& basis1 = pieces.basis(d1);
        if (basis1.empty()) continue;
        for (int d2 = d1; d2 + d1 <= bound; ++d2) {
            const auto& basis2 = pieces.basis(d2);
            if (basis2.empty()) continue;
            for (int b1 = 0; b1 < static_cast<int>(basis1.size()); ++b1)
                for (int b2 = 0; b2 < static_cast<int>(basis2.size()); ++b2)
                    for (int s = 0; s <= d1; ++s) tasks.push_back({d1, d2, b1, b2, s});
        }
    }

    // Precompute every needed membership basis before splitting into workers
    // (workers share the cache read-only).
    for (int d = 1; d <= bound; ++d) pieces.basis(d);

    int workers = std::min<int>(worker_count(), 4);
    std::vector<long> first_violation(workers, -1);
    std::vector<AdmissibilityWitness> witnesses(workers);

    auto run_range = [&](int w, std::size_t lo, std::size_t hi) {
        for (std::size_t t = lo; t < hi; ++t) {
            const Task& task = tasks[t];
            const HomPoly2& p1 = pieces.basis(task.d1)[task.b1];
            const HomPoly2& p2 = pieces.basis(task.d2)[task.b2];
            HomPoly2 w_s = w_vector(p1, p2, task.s);
            if (w_s.is_zero()) continue;
            ExactRowSpace space(w_s.degree() + 1);
            for (const auto& row : pieces.basis(w_s.degree())) space.insert(row.coefficients());
            if (!space.contains(w_s.coefficients())) {
                first_violation[w] = static_cast<long>(t);
                witnesses[w] = AdmissibilityWitness{p1, p2, task.s, w_s};
                return;
            }
        }
    };

    if (workers == 1) {
        run_range(0, 0, tasks.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (tasks.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = std::min(tasks.size(), w * chunk);
            std::size_t hi = std::min(tasks.size(), lo + chunk);
            pool.emplace_back(run_range, w, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    AdmissibilityReport report;
    report.pairs_checked = static_cast<long>(tasks.size());
    report.degree_bound = bound;
    long best = -1;
    for (int w = 0; w < workers; ++w) {
        if (first_violation[w] >= 0 && (best < 0 || first_violation[w] < best)) {
            best = first_violation[w];
            report.witness = witnesses[w];
        }
    }
    if (best >= 0) {
        report.verdict = AdmissibilityReport::Verdict::fail;
        report.note = "w-vector escapes the algebra";
    } else {
        report.verdict = AdmissibilityReport::Verdict::pass;
        report.note = "verified for all pairs with total degree <= " + std::to_string(bound);
    }
    return report;
}

// Every graded piece one-dimensional (the multiplicity-one condition).
inline bool multiplicity_free(const GradedAlgebraPresentation& algebra) {
    GradedPieces pieces(algebra);
    for (int d = 1; d <= algebra.degree_bound; ++d)
        if (pieces.basis(d).size() > 1) return false;
    return true;
}

// Content-normalized algebra generators of the full SL2-span inside k[SL2]:
// the module basis of each monomial generator.
inline std::vector<Poly4> sl2_span_generators(const GradedAlgebraPresentation& algebra) {
    std::vector<Poly4> result;
    for (const auto& gen : algebra.generators) {
        std::vector<Poly4> module;
        if (gen.is_monomial()) {
            int i = gen.top_index();
            module = module_basis(i, gen.degree() - i);
        } else {
            // General generators: span of all lowerings of the generator.
            Poly4 v = Poly4::from_hompoly(gen.monic());
            for (int e = 0; e <= gen.degree(); ++e) {
                Poly4 dropped = normal_form(lower(v, e));
                if (!dropped.is_zero()) module.push_back(binom(gen.degree(), e) * dropped);
            }
        }
        for (Poly4& v : module) {
            if (v.is_zero()) continue;
            // Scale away the coefficient content (and sign of the lead term).
            Integer num_gcd = 0, den_lcm = 1;
            for (const auto& [e, c] : v.terms()) {
                Integer n = c.get_num();
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            }
            Rational scale = Rational(den_lcm) / Rational(num_gcd);
            if (v.terms().begin()->second < 0) scale = -scale;
            result.push_back(scale * v);
        }
    }
    return result;
}

}  // namespace sl2orbit
