#include <sl2orbit/subalgebra.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sl2orbit;

namespace {

GradedAlgebraPresentation algebra(std::vector<HomPoly2> gens, int bound = 12) {
    return GradedAlgebraPresentation(std::move(gens), bound);
}

}  // namespace

TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(algebra({HomPoly2()}), std::invalid_argument);
    CHECK_THROWS_AS(algebra({HomPoly2(0, {rat(1)})}), std::invalid_argument);
    CHECK_THROWS_AS(algebra({HomPoly2::monomial(0, 1)}, 0), std::invalid_argument);

    // Duplicate generators collapse.
    auto a = algebra({HomPoly2::monomial(1, 1), HomPoly2::monomial(1, 1)});
    CHECK(a.generators.size() == 1);
}

TEST_CASE("graded pieces of monomial algebras") {
    auto torus = algebra({HomPoly2::monomial(1, 1)});
    auto piece4 = graded_piece(torus, 4);
    REQUIRE(piece4.size() == 1);
    CHECK(piece4[0] == HomPoly2::monomial(2, 2));
    CHECK(graded_piece(torus, 3).empty());

    auto two = algebra({HomPoly2::monomial(0, 1), HomPoly2::monomial(1, 1)});
    CHECK(graded_piece(two, 2).size() == 2);

    // <b^f>: pieces live only in degrees divisible by f.
    for (int f = 2; f <= 4; ++f) {
        auto cone = algebra({HomPoly2::monomial(0, f)});
        for (int d = 1; d <= 10; ++d)
            CHECK(graded_piece(cone, d).size() == (d % f == 0 ? 1u : 0u));
    }
}

TEST_CASE("graded piece dimensions match lattice point counts") {
    // Generators b and ab produce exactly the monomials a^i b^j with i <= j,
    // so dim of degree d is floor(d/2) + 1.
    auto two = algebra({HomPoly2::monomial(0, 1), HomPoly2::monomial(1, 1)});
    for (int d = 1; d <= 8; ++d)
        CHECK(static_cast<int>(graded_piece(two, d).size()) == d / 2 + 1);
}

TEST_CASE("membership") {
    HomPoly2 p = HomPoly2::monomial(2, 2) + HomPoly2::monomial(0, 4);
    auto single = algebra({p});

    CHECK(contains(single, p));
    CHECK(contains(single, rat(7) * p));
    CHECK(contains(single, p * p));
    CHECK(contains(single, HomPoly2()));
    CHECK_FALSE(contains(single, HomPoly2::monomial(2, 2)));
    CHECK_FALSE(contains(single, HomPoly2::monomial(0, 4)));
    CHECK_FALSE(contains(single, HomPoly2::monomial(0, 2)));
}

TEST_CASE("admissibility passes for the classified monomial families") {
    for (int f = 1; f <= 4; ++f) {
        auto cone = algebra({HomPoly2::monomial(0, f)});
        auto report = check_admissible(cone);
        CHECK(report.verdict == AdmissibilityReport::Verdict::pass);
        CHECK(report.pairs_checked > 0);
    }

    auto torus = algebra({HomPoly2::monomial(1, 1)});
    CHECK(check_admissible(torus).verdict == AdmissibilityReport::Verdict::pass);

    auto torus_norm = algebra({HomPoly2::monomial(2, 2)});
    auto report = check_admissible(torus_norm);
    CHECK(report.verdict == AdmissibilityReport::Verdict::pass);
    CHECK(report.note.find("12") != std::string::npos);
}

TEST_CASE("admissibility fails with an explicit escaping w vector") {
    HomPoly2 p = HomPoly2::monomial(2, 2) + HomPoly2::monomial(0, 4);
    auto report = check_admissible(algebra({p}));
    REQUIRE(report.verdict == AdmissibilityReport::Verdict::fail);
    REQUIRE(report.witness.has_value());
    const auto& w = *report.witness;
    CHECK(w.p1 == p);
    CHECK(w.p2 == p);
    CHECK(w.s == 2);
    CHECK(w.w.degree() == 4);
    CHECK(w.w.coeff(0) == rat(1, 3));
    CHECK(w.w.coeff(2) == rat(-1, 6));
    CHECK_FALSE(contains(algebra({p}), w.w));
}

TEST_CASE("admissibility fails for the cube of the diagonal monomial") {
    HomPoly2 cube = HomPoly2::monomial(3, 3);
    auto report = check_admissible(algebra({cube}, 16));
    REQUIRE(report.verdict == AdmissibilityReport::Verdict::fail);
    REQUIRE(report.witness.has_value());
    const auto& w = *report.witness;
    CHECK(w.s == 2);
    CHECK(w.w.degree() == 8);
    CHECK(w.w.is_monomial());
    CHECK(w.w.coeff(4) == rat(-1, 10));
}

TEST_CASE("multiplicity freeness") {
    CHECK(multiplicity_free(algebra({HomPoly2::monomial(0, 3)})));
    CHECK(multiplicity_free(algebra({HomPoly2::monomial(1, 1)})));
    CHECK(multiplicity_free(algebra({HomPoly2::monomial(2, 2)})));
    CHECK_FALSE(multiplicity_free(
        algebra({HomPoly2::monomial(0, 1), HomPoly2::monomial(1, 1)})));
}

TEST_CASE("span generators of a single b power") {
    auto gens = sl2_span_generators(algebra({HomPoly2::monomial(0, 2)}));
    REQUIRE(gens.size() == 3);

    Poly4 b2, bd, d2;
    b2.add_term({0, 2, 0, 0}, rat(1));
    bd.add_term({0, 1, 0, 1}, rat(1));
    d2.add_term({0, 0, 0, 2}, rat(1));
    CHECK(gens[0] == b2);
    CHECK(gens[1] == bd);
    CHECK(gens[2] == d2);

    // The middle generator squares to the product of the outer two.
    CHECK(multiply(gens[1], gens[1]) == multiply(gens[0], gens[2]));
}

TEST_CASE("span generators of b and of ab") {
    auto line = sl2_span_generators(algebra({HomPoly2::monomial(0, 1)}));
    REQUIRE(line.size() == 2);
    Poly4 b, d;
    b.add_term({0, 1, 0, 0}, rat(1));
    d.add_term({0, 0, 0, 1}, rat(1));
    CHECK(line[0] == b);
    CHECK(line[1] == d);

    auto torus = sl2_span_generators(algebra({HomPoly2::monomial(1, 1)}));
    REQUIRE(torus.size() == 3);
    Poly4 ab, mid, cd;
    ab.add_term({1, 1, 0, 0}, rat(1));
    mid.add_term({0, 0, 0, 0}, rat(1));
    mid.add_term({0, 1, 1, 0}, rat(2));
    cd.add_term({0, 0, 1, 1}, rat(1));
    CHECK(torus[0] == ab);
    CHECK(torus[1] == mid);
    CHECK(torus[2] == cd);
}

TEST_CASE("span generators of a non-monomial generator") {
    HomPoly2 p = HomPoly2::monomial(1, 1) + HomPoly2::monomial(0, 2);
    auto gens = sl2_span_generators(algebra({p}));
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == Poly4::from_hompoly(p));

    // Middle lowering of ab + b^2: normal form of ad + bc + 2bd = 1 + 2bc + 2bd.
    Poly4 mid;
    mid.add_term({0, 0, 0, 0}, rat(1));
    mid.add_term({0, 1, 1, 0}, rat(2));
    mid.add_term({0, 1, 0, 1}, rat(2));
    CHECK(gens[1] == mid);

    Poly4 bottom;
    bottom.add_term({0, 0, 1, 1}, rat(1));
    bottom.add_term({0, 0, 0, 2}, rat(1));
    CHECK(gens[2] == bottom);
}
