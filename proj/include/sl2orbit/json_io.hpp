#pragma once

#include <sl2orbit/classify.hpp>
#include <sl2orbit/cyclotomic.hpp>
#include <sl2orbit/finitegroups.hpp>
#include <sl2orbit/hwproduct.hpp>
#include <sl2orbit/poly4.hpp>
#include <sl2orbit/subalgebra.hpp>
#include <sl2orbit/toric.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace sl2orbit {

using nlohmann::json;

inline json to_json(const Rational& r) { return format_rational(r); }

inline Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a string \"p/q\"");
    return parse_rational(j.get<std::string>());
}

inline json to_json(const Poly4& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"c", format_rational(c)}, {"e", {e[0], e[1], e[2], e[3]}}});
    return json{{"vars", {"a", "b", "c", "d"}}, {"terms", terms}};
}

inline Poly4 poly4_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial must be {\"vars\":...,\"terms\":[...]}");
    Poly4 p;
    for (const auto& term : j["terms"]) {
        if (!term.contains("c") || !term.contains("e") || !term["e"].is_array())
            throw std::invalid_argument("each term needs \"c\" and \"e\"");
        const auto& e = term["e"];
        if (e.size() > 4) throw std::invalid_argument("at most four exponents");
        int exp[4] = {0, 0, 0, 0};
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (!e[t].is_number_integer() || e[t].get<long>() < 0)
                throw std::invalid_argument("exponents must be nonnegative integers");
            exp[t] = e[t].get<int>();
        }
        p.add_term({exp[0], exp[1], exp[2], exp[3]}, rational_from_json(term["c"]));
    }
    return p;
}

inline json to_json(const HomPoly2& p) { return to_json(Poly4::from_hompoly(p)); }

inline HomPoly2 hompoly_from_json(const json& j) { return to_hompoly(poly4_from_json(j)); }

inline json to_json(const Cyclotomic& value) {
    json coeffs = json::object();
    const auto& c = value.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e)
        if (c[e] != 0) coeffs[std::to_string(e)] = format_rational(c[e]);
    return json{{"n", value.conductor()}, {"coeffs", coeffs}};
}

inline json to_json(const GroupElement2& g) {
    return json{{"m",
                 {{format_rational(g.e00), format_rational(g.e01)},
                  {format_rational(g.e10), format_rational(g.e11)}}}};
}

inline GroupElement2 group_element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m")) throw std::invalid_argument("expected {\"m\": [[..]]}");
    const auto& m = j["m"];
    if (!m.is_array() || m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
        throw std::invalid_argument("\"m\" must be a 2x2 matrix");
    GroupElement2 g{rational_from_json(m[0][0]), rational_from_json(m[0][1]),
                    rational_from_json(m[1][0]), rational_from_json(m[1][1])};
    require_det_one(g);
    return g;
}

inline json to_json(const Semigroup2D& s) {
    json gens = json::array();
    for (const auto& p : s.hilbert_generators) gens.push_back({p.i, p.j});
    return json{{"gens", gens},
                {"f", s.f},
                {"rays", {{s.ray1.i, s.ray1.j}, {s.ray2.i, s.ray2.j}}}};
}

inline Semigroup2D semigroup_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gens") || !j["gens"].is_array())
        throw std::invalid_argument("semigroup must be {\"gens\": [[i,j],...], ...}");
    std::vector<LatticePoint> points;
    for (const auto& g : j["gens"]) {
        if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() || !g[1].is_number_integer())
            throw std::invalid_argument("each generator must be an [i, j] pair");
        points.push_back({g[0].get<long>(), g[1].get<long>()});
    }
    return semigroup_from_points(points);
}

inline json to_json(const GradedAlgebraPresentation& algebra) {
    json gens = json::array();
    for (const auto& g : algebra.generators) gens.push_back(to_json(g));
    return json{{"generators", gens}, {"bound", algebra.degree_bound}};
}

inline GradedAlgebraPresentation algebra_from_json(const json& j, int default_bound = 24) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("algebra must be {\"generators\": [poly,...]}");
    std::vector<HomPoly2> gens;
    for (const auto& g : j["generators"]) gens.push_back(hompoly_from_json(g));
    int bound = default_bound;
    if (j.contains("bound")) {
        if (!j["bound"].is_number_integer() || j["bound"].get<int>() < 1)
            throw std::invalid_argument("\"bound\" must be a positive integer");
        bound = j["bound"].get<int>();
    }
    return GradedAlgebraPresentation(std::move(gens), bound);
}

inline json to_json(const AdmissibilityReport& report) {
    json j{{"verdict", report.verdict == AdmissibilityReport::Verdict::pass      ? "pass"
                       : report.verdict == AdmissibilityReport::Verdict::fail ? "fail"
                                                                              : "inconclusive"},
           {"pairs_checked", report.pairs_checked},
           {"degree_bound", report.degree_bound},
           {"note", report.note}};
    if (report.witness) {
        j["witness"] = json{{"p1", to_json(report.witness->p1)},
                            {"p2", to_json(report.witness->p2)},
                            {"s", report.witness->s},
                            {"w", to_json(report.witness->w)}};
    }
    return j;
}

inline json to_json(const ProductDecomposition& decomposition) {
    json components = json::array();
    for (const auto& [s, w] : decomposition.components)
        components.push_back({{"s", s}, {"w", to_json(w)}, {"zero", w.is_zero()}});
    return json{{"p1", to_json(decomposition.p1)},
                {"p2", to_json(decomposition.p2)},
                {"components", components}};
}

inline json to_json(const ClassLabel& label) {
    switch (label.kind) {
        case ClassLabel::Kind::Homogeneous:
            return json{{"variant", "Homogeneous"},
                        {"subgroup", label.subgroup},
                        {"stabilizer", label.stabilizer}};
        case ClassLabel::Kind::SphericalCone:
            return json{{"variant", "SphericalCone"},
                        {"f", label.f},
                        {"stabilizer", label.stabilizer}};
        case ClassLabel::Kind::QF:
            return json{{"variant", "QF"},
                        {"q", format_rational(label.q)},
                        {"f", label.f},
                        {"stabilizer", label.stabilizer}};
    }
    throw std::logic_error("unreachable");
}

}  // namespace sl2orbit
