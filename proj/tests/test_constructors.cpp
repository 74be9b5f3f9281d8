#include <catch2/catch_amalgamated.hpp>

#include <ringlab/construct.hpp>
#include <ringlab/ideal.hpp>
#include <ringlab/map.hpp>

#include "oracle.hpp"

using namespace ringlab;

TEST_CASE("polyq builds GF(4)") {
    auto F4 = make_poly_quotient(2, "x^2+x+1");
    REQUIRE(F4->size == 4);
    CHECK(F4->provenance == "polyq(2, 1+x+x^2)");
    CHECK(F4->name(0) == "0");
    CHECK(F4->name(1) == "1");
    CHECK(F4->name(2) == "x");
    CHECK(F4->name(3) == "1+x");
    // x * x = x + 1, x * (1+x) = 1
    CHECK(F4->mul(2, 2) == 3);
    CHECK(F4->mul(2, 3) == 1);
    for (int x = 1; x < 4; ++x) CHECK(oracle::is_unit(*F4, (Elem)x));
}

TEST_CASE("polyq with nilpotents") {
    auto R = make_poly_quotient(2, "x^2");
    REQUIRE(R->size == 4);
    CHECK(R->mul(2, 2) == 0);  // x^2 = 0
    CHECK(oracle::is_nilpotent(*R, 2));
    CHECK(!oracle::is_regular(*R, 2));
}

TEST_CASE("polyq guards") {
    CHECK_THROWS_AS(make_poly_quotient(2, "3"), InputError);        // degree 0 after reduction
    CHECK_THROWS_AS(make_poly_quotient(4, "2x^2+x"), InputError);   // non-monic mod 4
    CHECK_THROWS_AS(make_poly_quotient(1, "x^2"), InputError);
    // leading coefficient that vanishes mod n just lowers the degree
    CHECK(make_poly_quotient(2, "2x^2+x")->size == 2);
}

TEST_CASE("product encoding is first-factor least significant") {
    auto P = direct_product({make_zn(2), make_zn(4)});
    REQUIRE(P->size == 8);
    CHECK(P->provenance == "product(Zn(2), Zn(4))");
    CHECK(P->name(1) == "(1,0)");
    CHECK(P->name(2) == "(0,1)");
    CHECK(P->one == 3);  // (1,1)
    // componentwise arithmetic: (1,2) + (1,3) = (0,1)
    Elem a = (Elem)(1 + 2 * 2), b = (Elem)(1 + 2 * 3);
    CHECK(P->add(a, b) == 2);
    CHECK(P->mul(a, b) == (Elem)(1 + 2 * 2));  // (1*1, 2*3) = (1, 2)
}

TEST_CASE("product arity and nesting") {
    CHECK_THROWS_AS(direct_product({make_zn(2)}), InputError);
    auto N = direct_product({direct_product({make_zn(2), make_zn(2)}), make_zn(3)});
    CHECK(N->size == 12);
    CHECK(N->provenance == "product(product(Zn(2), Zn(2)), Zn(3))");
}

TEST_CASE("matrix ring M2(Z2)") {
    auto M = matrix_ring(make_zn(2), 2);
    REQUIRE(M->size == 16);
    CHECK(M->provenance == "M(Zn(2), 2)");
    // ids are row-major, entry (0,0) least significant
    CHECK(M->name(1) == "[[1,0],[0,0]]");
    CHECK(M->name(2) == "[[0,1],[0,0]]");
    CHECK(M->one == 9);  // identity matrix: a=1 (bit 0), d=1 (bit 3)
    // E12 * E21 = E11
    CHECK(M->mul(2, 4) == 1);
    // E21 * E12 = E22
    CHECK(M->mul(4, 2) == 8);
    int units = 0, idems = 0, regs = 0;
    for (int x = 0; x < 16; ++x) {
        units += oracle::is_unit(*M, (Elem)x);
        idems += oracle::is_idempotent(*M, (Elem)x);
        regs += oracle::is_regular(*M, (Elem)x);
    }
    CHECK(units == 6);
    CHECK(idems == 8);
    CHECK(regs == 16);
}

TEST_CASE("matrix ring cap") {
    CHECK_THROWS_AS(matrix_ring(make_zn(3), 3), CapError);             // 3^9
    CHECK_THROWS_AS(matrix_ring(matrix_ring(make_zn(2), 2), 2), CapError);  // 16^4
}

TEST_CASE("triangular ring over Z2") {
    auto T = triangular_ring(make_zn(2));
    REQUIRE(T->size == 8);
    CHECK(T->provenance == "tri(Zn(2))");
    CHECK(T->name(3) == "[[1,1],[0,0]]");
    CHECK(T->one == 5);  // a=1, c=1
    // noncommutative: E11 * E12 = E12 but E12 * E11 = 0
    Elem e11 = 1, e12 = 2;
    CHECK(T->mul(e11, e12) == e12);
    CHECK(T->mul(e12, e11) == T->zero);
    CHECK(oracle::is_idempotent(*T, 3));
}

TEST_CASE("truncated series, identity twist") {
    auto T = truncated_skew_series(make_zn(2), {0, 1}, 2, "id");
    REQUIRE(T->size == 4);
    CHECK(T->provenance == "trunc(Zn(2), id, 2)");
    CHECK(T->name(2) == "X");
    CHECK(T->name(3) == "1+X");
    CHECK(T->mul(2, 2) == 0);  // X^2 = 0
    // unit iff constant term is a unit
    CHECK(oracle::is_unit(*T, 1));
    CHECK(oracle::is_unit(*T, 3));
    CHECK(!oracle::is_unit(*T, 2));
    CHECK(!oracle::is_regular(*T, 2));
}

TEST_CASE("truncated series, frobenius twist is noncommutative") {
    auto F4 = make_poly_quotient(2, "x^2+x+1");
    auto fr = frobenius_map(F4);
    REQUIRE(fr.has_value());
    CHECK(fr->img == std::vector<Elem>{0, 1, 3, 2});
    auto T = truncated_skew_series(F4, fr->img, 2, "frobenius");
    REQUIRE(T->size == 16);
    CHECK(T->provenance == "trunc(polyq(2, 1+x+x^2), frobenius, 2)");
    // X * a = frobenius(a) * X:  X * x = (1+x) X
    Elem X = 4, xconst = 2;
    CHECK(T->mul(X, xconst) == (Elem)(3 * 4));
    CHECK(T->mul(xconst, X) == (Elem)(2 * 4));
    bool comm = true;
    for (int a = 0; a < T->size && comm; ++a)
        for (int b = 0; b < T->size && comm; ++b)
            if (T->mul((Elem)a, (Elem)b) != T->mul((Elem)b, (Elem)a)) comm = false;
    CHECK(!comm);
}

TEST_CASE("trunc rejects a non-endomorphism twist") {
    CHECK_THROWS_AS(truncated_skew_series(make_zn(4), {0, 2, 1, 3}, 2, "bogus"), InputError);
}

TEST_CASE("corner ring of a matrix idempotent") {
    auto M = matrix_ring(make_zn(2), 2);
    auto C = corner_ring(M, 1);  // e = E11
    REQUIRE(C->size == 2);
    CHECK(C->provenance == "corner(M(Zn(2), 2), #1)");
    CHECK(C->one == 1);
    CHECK(C->parent_elem == std::vector<Elem>{0, 1});
    CHECK_THROWS_AS(corner_ring(M, 2), InputError);  // E12 is not idempotent
}

TEST_CASE("center of M2(Z2) is the scalars") {
    auto M = matrix_ring(make_zn(2), 2);
    auto Z = center_ring(M);
    REQUIRE(Z->size == 2);
    CHECK(Z->provenance == "center(M(Zn(2), 2))");
    CHECK(Z->parent_elem == std::vector<Elem>{0, 9});
}

TEST_CASE("quotient Z6 by (3)") {
    auto R = make_zn(6);
    auto I = ideal_closure(R, {3});
    CHECK(I.members == std::vector<Elem>{0, 3});
    auto Q = quotient_ring(I);
    REQUIRE(Q->size == 3);
    CHECK(Q->name(0) == "[0]");
    CHECK(Q->name(1) == "[1]");
    CHECK(Q->name(2) == "[2]");
    // behaves like Z3
    CHECK(Q->add(2, 2) == 1);
    CHECK(Q->mul(2, 2) == 1);
}

TEST_CASE("product of ideals closure") {
    auto R = make_zn(12);
    auto I = ideal_closure(R, {8, 6});
    // (8,6) generates gcd(8,6,12)=2 -> {0,2,4,6,8,10}
    CHECK(I.members == std::vector<Elem>{0, 2, 4, 6, 8, 10});
    CHECK(I.contains(10));
    CHECK(!I.contains(3));
    CHECK(!I.is_whole_ring());
    CHECK(ideal_closure(R, {5}).is_whole_ring());
}
