#include <doctest.h>

#include "qhx/families.hpp"
#include "qhx/functors.hpp"
#include "qhx/predicates.hpp"

using namespace qhx;

TEST_CASE("tournament T_n has one edge per ordered pair i < j") {
    for (int n = 1; n <= 6; ++n) {
        Quiver t = family_T(n);
        CHECK(t.vertex_count() == static_cast<std::size_t>(n + 1));
        CHECK(t.edge_count() == static_cast<std::size_t>(n * (n + 1) / 2));
        CHECK_FALSE(has_oriented_cycle(t));
    }
    CHECK(family_T(3).edge("e0").src == "v0");
    CHECK(family_T(3).edge("e0").dst == "v1");
}

TEST_CASE("alternating K_{n,m} is alternating and loop-free") {
    Quiver k = family_K(3, 4);
    CHECK(k.edge_count() == 12);
    StructuralPredicates p = structural_predicates(k);
    CHECK(p.is_alternating);
    CHECK_FALSE(p.has_oriented_cycle);
}

TEST_CASE("half-graph B_n equals iota of the blown-up tournament shape") {
    // B_1 is a single undirected edge p1-q1
    Quiver b1 = family_B(1);
    CHECK(b1.geometric_edge_count() == 1);
    // B_n has n(n+1)/2 undirected edges
    for (int n = 1; n <= 5; ++n)
        CHECK(family_B(n).geometric_edge_count() ==
              static_cast<std::size_t>(n * (n + 1) / 2));
}

TEST_CASE("dandelion shapes") {
    CHECK(family_D(0, 3).out_degree("v0") == 3);
    CHECK(family_D(2, 0).in_degree("v0") == 2);
    CHECK_THROWS_AS(family_D(0, 0), BadParams);
    CHECK(structural_predicates(family_D(3, 2)).unstable_vertices ==
          std::vector<std::string>{"v0"});
}

TEST_CASE("dispatcher parses arities") {
    CHECK(family("I", {3}).same_structure(family_I(3)));
    CHECK(family("K", {2, 2}).same_structure(family_K(2, 2)));
    CHECK_THROWS_AS(family("I", {}), BadParams);
    CHECK_THROWS_AS(family("K", {2}), BadParams);
}

TEST_CASE("A_n alternates direction edge by edge") {
    Quiver a5 = family_A(5);
    CHECK(a5.edge("e0").src == "v0");
    CHECK(a5.edge("e1").src == "v2");
    CHECK(a5.edge("e1").dst == "v1");
    CHECK(a5.edge("e2").src == "v2");
    CHECK(a5.edge("e2").dst == "v3");
}
