#include "doctest.h"

#include <stdexcept>

#include "rsf/closedforms.hpp"
#include "rsf/lintree.hpp"
#include "rsf/oracle.hpp"
#include "test_support.hpp"

using rsf::IntPoly;
using rsf::PolyMatrix;
using rsf::WeightedGraph;
using rsf::parse_poly;

TEST_CASE("laplacian of the unit triangle") {
    PolyMatrix m = rsf::laplacian(rsf::build_cycle(3, IntPoly::one()));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(m.at(i, j) == (i == j ? IntPoly::constant(2) : IntPoly::constant(-1)));
    CHECK_THROWS_AS(rsf::laplacian(rsf::build_oriented_sunlet(3, IntPoly::x(), IntPoly::one())),
                    rsf::DomainError);
}

TEST_CASE("laplacian rows sum to zero") {
    WeightedGraph g = rsf::build_sunlet(4, IntPoly::x(), IntPoly{1, 2});
    PolyMatrix m = rsf::laplacian(g);
    for (std::size_t i = 0; i < m.size(); ++i) {
        IntPoly row;
        for (std::size_t j = 0; j < m.size(); ++j)
            row += m.at(i, j);
        CHECK(row.is_zero());
    }
}

TEST_CASE("internal block of the sunlet laplacian is the circulant") {
    IntPoly a = IntPoly::x(), b{0, 0, 1}; // b = x^2 to catch weight mixups
    WeightedGraph g = rsf::build_sunlet(6, a, b);
    PolyMatrix block = rsf::internal_submatrix(rsf::laplacian(g), g);
    CHECK(block == rsf::circulant_internal_matrix(6, a, b));
}

TEST_CASE("oriented laplacian matches the arc definition") {
    IntPoly a = IntPoly::x(), b = IntPoly::one();
    WeightedGraph merged = rsf::collapse_nodes(rsf::build_oriented_sunlet(3, a, b));
    PolyMatrix m = rsf::oriented_laplacian(merged);
    // internal block: a+b on the diagonal, -b one step right, wrapping
    PolyMatrix block = rsf::internal_submatrix(m, merged);
    REQUIRE(block.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(block.at(i, j) == a + b);
            else if (j == (i + 1) % 3)
                CHECK(block.at(i, j) == -b);
            else
                CHECK(block.at(i, j).is_zero());
        }
    // merged node has no in-arcs
    CHECK(m.at(0, 0).is_zero());
    CHECK_THROWS_AS(rsf::oriented_laplacian(rsf::build_sunlet(3, a, b)), rsf::DomainError);

    // pure cycle: one in-arc per vertex
    WeightedGraph cyc = rsf::build_cycle(3, b);
    cyc.oriented = true;
    PolyMatrix cm = rsf::oriented_laplacian(cyc);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(cm.at(i, i) == b);
}

TEST_CASE("oriented laplacian columns sum to zero") {
    WeightedGraph g = rsf::build_oriented_sunlet(5, IntPoly::x(), IntPoly{1, 1});
    PolyMatrix m = rsf::oriented_laplacian(g);
    for (std::size_t j = 0; j < m.size(); ++j) {
        IntPoly col;
        for (std::size_t i = 0; i < m.size(); ++i)
            col += m.at(i, j);
        CHECK(col.is_zero());
    }
}

TEST_CASE("internal_submatrix edge cases") {
    WeightedGraph all_internal = rsf::build_cycle(4, IntPoly::one());
    PolyMatrix m = rsf::laplacian(all_internal);
    CHECK(rsf::internal_submatrix(m, all_internal) == m);

    WeightedGraph tiny;
    tiny.vertex_count = 2;
    tiny.node_flags = {true, false};
    tiny.edges.push_back({0, 1, IntPoly::x()});
    PolyMatrix sub = rsf::internal_submatrix(rsf::laplacian(tiny), tiny);
    REQUIRE(sub.size() == 1);
    CHECK(sub.at(0, 0) == IntPoly::x());
}

TEST_CASE("determinant basics") {
    CHECK(rsf::det(PolyMatrix()) == IntPoly::one());

    PolyMatrix id(5);
    for (std::size_t i = 0; i < 5; ++i)
        id.at(i, i) = IntPoly::one();
    CHECK(rsf::det(id) == IntPoly::one());

    PolyMatrix tri(4);
    for (std::size_t i = 0; i < 4; ++i) {
        tri.at(i, i) = IntPoly{1, 1};
        for (std::size_t j = i + 1; j < 4; ++j)
            tri.at(i, j) = IntPoly::x();
    }
    CHECK(rsf::det(tri) == rsf::pow(IntPoly{1, 1}, 4));

    PolyMatrix singular(3); // two equal rows
    for (std::size_t j = 0; j < 3; ++j) {
        singular.at(0, j) = IntPoly{static_cast<int>(j), 1};
        singular.at(1, j) = singular.at(0, j);
        singular.at(2, j) = IntPoly::x();
    }
    CHECK(rsf::det(singular).is_zero());

    CHECK(rsf::det(rsf::circulant_internal_matrix(3, IntPoly::x(), IntPoly::one())) ==
          parse_poly("x^3 + 6*x^2 + 9*x"));
}

TEST_CASE("determinant needs row swaps when the pivot vanishes") {
    PolyMatrix m(3);
    m.at(0, 1) = IntPoly::one();
    m.at(1, 0) = IntPoly::one();
    m.at(2, 2) = IntPoly::x();
    CHECK(rsf::det(m) == -IntPoly::x());
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(112358);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t size = 1 + iter % 5;
        PolyMatrix m = rsf::testing::random_matrix(rng, size);
        CHECK(rsf::det(m) == rsf::testing::naive_det(m));
    }
}

TEST_CASE("cofactor_det") {
    PolyMatrix l = rsf::laplacian(rsf::build_cycle(3, IntPoly::one()));
    CHECK(rsf::cofactor_det(l, 0, 0) == IntPoly::constant(3)); // spanning trees of K_3
    // matrix tree well-definedness: all cofactors of a laplacian agree
    WeightedGraph g = rsf::build_sunlet(3, IntPoly::x(), IntPoly::one());
    PolyMatrix lg = rsf::laplacian(g);
    IntPoly reference = rsf::cofactor_det(lg, 0, 0);
    for (std::size_t i = 0; i < lg.size(); ++i)
        for (std::size_t j = 0; j < lg.size(); ++j)
            CHECK(rsf::cofactor_det(lg, i, j) == reference);

    PolyMatrix one(1);
    one.at(0, 0) = parse_poly("x^5 + 1");
    CHECK(rsf::cofactor_det(one, 0, 0) == IntPoly::one());
    CHECK_THROWS_AS(rsf::cofactor_det(one, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(rsf::cofactor_det(PolyMatrix(), 0, 0), std::out_of_range);
}

TEST_CASE("forest_sum through the full pipeline") {
    CHECK(rsf::forest_sum(rsf::build_sunlet(3, IntPoly::x(), IntPoly::one())) ==
          parse_poly("x^3 + 6*x^2 + 9*x"));
    CHECK(rsf::forest_sum(rsf::build_sunlet(6, IntPoly::x(), IntPoly::one())) ==
          parse_poly("x^6 + 12*x^5 + 54*x^4 + 112*x^3 + 105*x^2 + 36*x"));

    // single pendant edge: the only forest takes the edge
    WeightedGraph tiny;
    tiny.vertex_count = 2;
    tiny.node_flags = {false, true};
    IntPoly w{3, 1};
    tiny.edges.push_back({0, 1, w});
    CHECK(rsf::forest_sum(tiny) == w);

    CHECK_THROWS_AS(rsf::forest_sum(rsf::build_cycle(3, IntPoly::one())), rsf::DomainError);
    CHECK_THROWS_AS(
        rsf::forest_sum(rsf::build_oriented_sunlet(3, IntPoly::x(), IntPoly::one())),
        rsf::DomainError);
}

TEST_CASE("forest_sum is preserved by collapse_nodes") {
    std::mt19937_64 rng(2468);
    for (int iter = 0; iter < 30; ++iter) {
        WeightedGraph g = rsf::testing::random_graph(rng, 7, 1 + iter % 3, 12);
        CHECK(rsf::forest_sum(g) == rsf::forest_sum(rsf::collapse_nodes(g)));
    }
}

TEST_CASE("oriented_forest_sum") {
    CHECK(rsf::oriented_forest_sum(rsf::build_oriented_sunlet(3, IntPoly::x(), IntPoly::one())) ==
          parse_poly("x^3 + 3*x^2 + 3*x"));
    IntPoly f6 = rsf::oriented_forest_sum(rsf::build_oriented_sunlet(6, IntPoly::x(), IntPoly::one()));
    CHECK(f6 == rsf::oriented_forest_poly(6));
    CHECK(rsf::homogenize(f6, 6) ==
          "a^6 + 6*a^5*b + 15*a^4*b^2 + 20*a^3*b^3 + 15*a^2*b^4 + 6*a*b^5");

    WeightedGraph arc;
    arc.oriented = true;
    arc.vertex_count = 2;
    arc.node_flags = {true, false};
    arc.edges.push_back({0, 1, IntPoly{7, 2}});
    CHECK(rsf::oriented_forest_sum(arc) == IntPoly{7, 2});

    CHECK_THROWS_AS(rsf::oriented_forest_sum(rsf::build_sunlet(3, IntPoly::x(), IntPoly::one())),
                    rsf::DomainError);
}

TEST_CASE("circulant matrix covers the degenerate sizes") {
    CHECK(rsf::det(rsf::circulant_internal_matrix(1, IntPoly::x(), IntPoly::one())) ==
          IntPoly::x());
    CHECK(rsf::det(rsf::circulant_internal_matrix(2, IntPoly::x(), IntPoly::one())) ==
          parse_poly("x^2 + 4*x"));
    CHECK(rsf::det(rsf::circulant_internal_matrix(4, IntPoly::x(), IntPoly::one())) ==
          parse_poly("x^4 + 8*x^3 + 20*x^2 + 16*x"));
    PolyMatrix two = rsf::circulant_internal_matrix(2, IntPoly::x(), IntPoly::one());
    CHECK(two.at(0, 1) == IntPoly::constant(-2));
    CHECK_THROWS_AS(rsf::circulant_internal_matrix(0, IntPoly::x(), IntPoly::one()),
                    rsf::DomainError);
}

TEST_CASE("determinant path equals the chebyshev path") {
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(rsf::det(rsf::circulant_internal_matrix(n, IntPoly::x(), IntPoly::one())) ==
              rsf::forest_poly(n));
}
