#include <sl2orbit/finitegroups.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace sl2orbit;

namespace {

bool poly_in(const std::vector<HomPoly2>& list, const HomPoly2& p) {
    return std::find(list.begin(), list.end(), p) != list.end();
}

}  // namespace

TEST_CASE("catalog orders") {
    for (long f : {1L, 2L, 3L, 5L, 8L}) CHECK(catalog(GroupLabel::TypeA, f).order() == f);

    // The binary dihedral closure doubles the cyclic part; for odd f the
    // rotation of order f and the Weyl element generate 4f elements.
    CHECK(catalog(GroupLabel::TypeD, 1).order() == 4);
    CHECK(catalog(GroupLabel::TypeD, 2).order() == 4);
    CHECK(catalog(GroupLabel::TypeD, 3).order() == 12);
    CHECK(catalog(GroupLabel::TypeD, 4).order() == 8);
    CHECK(catalog(GroupLabel::TypeD, 5).order() == 20);

    CHECK(catalog(GroupLabel::E6).order() == 24);
    CHECK(catalog(GroupLabel::E7).order() == 48);
    CHECK(catalog(GroupLabel::E8).order() == 120);

    CHECK(catalog(GroupLabel::TypeA, 3).name() == "mu_3");
    CHECK(catalog(GroupLabel::TypeD, 2).name() == "D_2");
    CHECK(catalog(GroupLabel::E8).name() == "E8");
    CHECK_THROWS_AS(catalog(GroupLabel::TypeA, 0), std::invalid_argument);
}

TEST_CASE("closures are groups") {
    for (const auto& group : {catalog(GroupLabel::TypeA, 4), catalog(GroupLabel::TypeD, 3),
                              catalog(GroupLabel::E6), catalog(GroupLabel::E8)}) {
        std::set<CycMatrix2, detail::MatrixKey> elements(group.elements.begin(),
                                                         group.elements.end());
        Cyclotomic one(Rational(1), group.conductor);
        for (const auto& g : group.elements) {
            CHECK(g.det() == one);
            // Inverse of a determinant-1 matrix is its adjugate.
            CycMatrix2 inv{g.e11, Cyclotomic(Rational(0), group.conductor) - g.e01,
                           Cyclotomic(Rational(0), group.conductor) - g.e10, g.e00};
            CHECK(elements.count(inv) == 1);
        }
        // Spot-check closure under multiplication.
        for (std::size_t x = 0; x < group.elements.size(); x += 7)
            for (std::size_t y = 0; y < group.elements.size(); y += 11)
                CHECK(elements.count(group.elements[x] * group.elements[y]) == 1);
    }
}

TEST_CASE("molien series values") {
    CHECK(molien_coefficients(catalog(GroupLabel::TypeA, 2), 4) ==
          std::vector<long>{1, 0, 3, 0, 5});

    // Trivial group: the full polynomial ring, dimension d + 1 in degree d.
    auto trivial = molien_coefficients(catalog(GroupLabel::TypeA, 1), 6);
    for (int d = 0; d <= 6; ++d) CHECK(trivial[d] == d + 1);

    // Binary icosahedral: no invariants below degree 12, one at 12.
    auto e8 = molien_coefficients(catalog(GroupLabel::E8), 12);
    CHECK(e8[0] == 1);
    for (int d = 1; d <= 11; ++d) CHECK(e8[d] == 0);
    CHECK(e8[12] == 1);
}

TEST_CASE("reynolds invariant bases") {
    auto pm = reynolds_invariants(catalog(GroupLabel::TypeA, 2), 2);
    REQUIRE(pm.size() == 3);
    CHECK(poly_in(pm, HomPoly2::monomial(0, 2)));
    CHECK(poly_in(pm, HomPoly2::monomial(1, 1)));
    CHECK(poly_in(pm, HomPoly2::monomial(2, 0)));

    auto dihedral = reynolds_invariants(catalog(GroupLabel::TypeD, 2), 2);
    REQUIRE(dihedral.size() == 1);
    CHECK(dihedral[0] == HomPoly2::monomial(2, 0) + HomPoly2::monomial(0, 2));

    auto trivial = reynolds_invariants(catalog(GroupLabel::TypeA, 1), 1);
    REQUIRE(trivial.size() == 2);
    CHECK(poly_in(trivial, HomPoly2::monomial(0, 1)));
    CHECK(poly_in(trivial, HomPoly2::monomial(1, 0)));
}

TEST_CASE("invariant dimensions match the molien series") {
    for (const auto& group : {catalog(GroupLabel::TypeA, 2), catalog(GroupLabel::TypeA, 3),
                              catalog(GroupLabel::TypeD, 2), catalog(GroupLabel::TypeD, 3),
                              catalog(GroupLabel::E6), catalog(GroupLabel::E7)}) {
        auto series = molien_coefficients(group, 8);
        for (int d = 0; d <= 8; ++d) {
            INFO(group.name() << " degree " << d);
            CHECK(static_cast<long>(reynolds_invariants(group, d).size()) == series[d]);
        }
    }
}
