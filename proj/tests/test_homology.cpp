#include <doctest.h>

#include "qhx/blowup.hpp"
#include "qhx/families.hpp"
#include "qhx/functors.hpp"
#include "qhx/homology.hpp"
#include "qhx/multipath.hpp"
#include "qhx/survey.hpp"
#include "support/random_graphs.hpp"

using namespace qhx;

TEST_CASE("chain complex ranks of the triangle boundary") {
    SimplicialComplex tri = multipath_complex(family_P(3));
    ChainComplexZ reduced = chain_complex(tri, true);
    CHECK(reduced.lowest_degree() == -1);
    CHECK(reduced.rank(-1) == 1);
    CHECK(reduced.rank(0) == 3);
    CHECK(reduced.rank(1) == 3);
    CHECK(reduced.boundary_condition_holds());

    SimplicialComplex full = multipath_complex(family_I(3));
    ChainComplexZ cc = chain_complex(full, true);
    CHECK(cc.rank(2) == 1);
    CHECK(cc.boundary_condition_holds());

    ChainComplexZ p4 = chain_complex(multipath_complex(family_P(4)), true);
    CHECK(p4.rank(0) == 4);
    CHECK(p4.rank(1) == 6);
    CHECK(p4.rank(2) == 4);
}

TEST_CASE("boundary of boundary vanishes on fuzzed complexes") {
    testing::Rng rng(61001);
    for (int t = 0; t < 1000; ++t) {
        Quiver g = testing::random_digraph(rng, 6, 8);
        SimplicialComplex x = multipath_complex(g);
        CHECK(chain_complex(x, true).boundary_condition_holds());
        CHECK(chain_complex(x, false).boundary_condition_holds());
    }
}

TEST_CASE("simplices are acyclic, polygons are spheres") {
    for (int n = 1; n <= 6; ++n) {
        HomologyProfile p = homology(multipath_complex(family_I(n)), true);
        for (const auto& row : p.rows) {
            CHECK(row.betti == 0);
            CHECK(row.torsion.empty());
        }
    }
    for (int n = 3; n <= 6; ++n) {
        HomologyProfile p = homology(multipath_complex(family_P(n)), true);
        for (const auto& row : p.rows) {
            CHECK(row.betti == (row.degree == n - 2 ? 1 : 0));
            CHECK(row.torsion.empty());
        }
    }
}

TEST_CASE("reduced versus unreduced bookkeeping") {
    SimplicialComplex two_points = multipath_complex(family_A(2));
    CHECK(homology(two_points, false).betti_at(0) == 2);
    CHECK(homology(two_points, true).betti_at(0) == 1);

    SimplicialComplex empty;  // {∅}
    HomologyProfile reduced = homology(empty, true);
    REQUIRE(reduced.rows.size() == 1);
    CHECK(reduced.rows[0].degree == -1);
    CHECK(reduced.rows[0].betti == 1);
    CHECK(homology(empty, false).rows.empty());

    // a contractible complex has no degree −1 row in the reduced profile
    HomologyProfile pt = homology(multipath_complex(family_I(1)), true);
    for (const auto& row : pt.rows) CHECK(row.degree >= 0);
}

TEST_CASE("Euler characteristic identity on fuzzed complexes") {
    testing::Rng rng(61002);
    for (int t = 0; t < 300; ++t) {
        Quiver g = testing::random_digraph(rng, 6, 8);
        SimplicialComplex x = multipath_complex(g);
        ChainComplexZ cc = chain_complex(x, false);
        CHECK(euler_characteristic_matches(cc, homology(cc)));
    }
}

TEST_CASE("the K_{5,5} matching complex has exactly 3-torsion") {
    SimplicialComplex m = matching_complex(underlying_graph(family_K(5, 5)));
    CHECK(m.face_count() == 1546);
    HomologyProfile p = homology(m, true);
    CHECK(p.torsion_at(2) == std::vector<BigInt>{3});
    for (const auto& row : p.rows)
        if (row.degree != 2) CHECK(row.torsion.empty());
    // the same complex through the multipath route
    HomologyProfile q = homology(multipath_complex(family_K(5, 5)), true);
    CHECK(q.torsion_at(2) == std::vector<BigInt>{3});
}

TEST_CASE("minimal projective plane triangulation carries 2-torsion") {
    SimplicialComplex rp2 = SimplicialComplex::from_faces(
        {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "5"}, {"1", "4", "6"}, {"1", "5", "6"},
         {"2", "3", "6"}, {"2", "4", "5"}, {"2", "5", "6"}, {"3", "4", "5"}, {"3", "4", "6"}});
    CHECK(rp2.f_vector() == std::vector<std::size_t>{6, 15, 10});
    HomologyProfile p = homology(rp2, false);
    CHECK(p.betti_at(0) == 1);
    CHECK(p.betti_at(1) == 0);
    CHECK(p.torsion_at(1) == std::vector<BigInt>{2});
    CHECK(p.betti_at(2) == 0);
    CHECK(p.torsion_at(2).empty());
    CHECK(torsion_exponent(p) == 2);
}

TEST_CASE("torsion exponent") {
    HomologyProfile free;
    free.rows = {{0, 2, {}}, {1, 1, {}}};
    CHECK(torsion_exponent(free) == 1);

    HomologyProfile three;
    three.rows = {{2, 0, {BigInt(3)}}};
    CHECK(torsion_exponent(three) == 3);

    HomologyProfile mixed;
    mixed.rows = {{1, 0, {BigInt(2)}}, {2, 0, {BigInt(3)}}};
    CHECK(torsion_exponent(mixed) == 6);
}

TEST_CASE("join homology matches the sphere-join rule") {
    // X(P_m) * X(P_n) is a sphere of dimension (m-2)+(n-2)+1
    for (int m = 3; m <= 5; ++m)
        for (int n = 3; n <= 5; ++n) {
            SimplicialComplex j =
                join(multipath_complex(family_P(m)), multipath_complex(family_P(n)));
            HomologyProfile p = homology(j, true);
            for (const auto& row : p.rows) {
                CHECK(row.betti == (row.degree == m + n - 3 ? 1 : 0));
                CHECK(row.torsion.empty());
            }
        }
}

TEST_CASE("forest multipath homology is torsion free") {
    testing::Rng rng(61003);
    for (int t = 0; t < 200; ++t) {
        Quiver f = testing::random_directed_forest(rng, 10);
        HomologyProfile p = homology(multipath_complex(f), true);
        CHECK(torsion_exponent(p) == 1);
    }
}

TEST_CASE("torsion survey on tiny bounds") {
    std::vector<SurveyRow> rows = torsion_survey(2, 2, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].genus == 0);
    CHECK(rows[0].max_exponent == 1);
    CHECK(rows[1].max_exponent == 1);

    // counts at (2,2,1): genus 0 holds the point and the segment, genus 1
    // the 2-cycle
    CHECK(rows[0].classes == 2);
    CHECK(rows[1].classes == 1);

    CHECK_THROWS_AS(torsion_survey(6, 5, 1), BoundsTooLarge);
    CHECK_THROWS_AS(torsion_survey(0, 5, 1), BadParams);
}

TEST_CASE("torsion survey at (4,6,1) reports only trivial exponents") {
    std::vector<SurveyRow> rows = torsion_survey(4, 6, 1);
    for (const auto& row : rows) {
        CHECK(row.max_exponent == 1);
        CHECK(row.classes > 0);
    }
}

TEST_CASE("survey streams rows in genus order") {
    std::vector<int> seen;
    torsion_survey(3, 4, 2, [&](const SurveyRow& row) { seen.push_back(row.genus); });
    CHECK(seen == std::vector<int>{0, 1, 2});
}

TEST_CASE("torsion survey at (5,8,2): frozen exhaustive table") {
    std::vector<SurveyRow> rows = torsion_survey(5, 8, 2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].classes == 40);
    CHECK(rows[1].classes == 135);
    CHECK(rows[2].classes == 367);
    for (const auto& row : rows) CHECK(row.max_exponent == 1);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        CHECK(rows[i].classes < rows[i + 1].classes);
}
