#include <catch2/catch_amalgamated.hpp>

#include <ringlab/classify.hpp>
#include <ringlab/construct.hpp>
#include <ringlab/star.hpp>

#include "oracle.hpp"

using namespace ringlab;

TEST_CASE("census of Z6") {
    auto A = analyze(make_zn(6));
    const Census& c = A.census;
    CHECK(c.ring == "Zn(6)");
    CHECK(c.size == 6);
    CHECK(c.n_unit == 2);
    CHECK(c.n_idem == 4);
    CHECK(c.n_reg == 6);
    CHECK(c.n_nil == 1);
    CHECK(c.n_central == 6);
    CHECK(c.n_jac == 1);
    CHECK(c.n_proj == -1);
    CHECK(c.n_root == -1);
    CHECK(c.commutative);
    CHECK(c.abelian);
    CHECK(!c.boolean_ring);
    CHECK(!c.no_zero_divisors);
    CHECK(!c.two_invertible);
    CHECK(!c.trivial_idempotents_only);
    CHECK(c.is_clean.value);
    CHECK(c.is_weakly_clean.value);
    CHECK(c.is_r_clean.value);
    CHECK(c.is_weakly_r_clean.value);
    CHECK(c.is_exchange.value);
    CHECK(c.is_weakly_exchange.value);
    CHECK(c.is_strongly_clean.value);
    CHECK(!c.is_star_clean.has_value());
    CHECK(!c.is_g_clean.has_value());
}

TEST_CASE("census of Z4 and Z5") {
    auto c4 = analyze(make_zn(4)).census;
    CHECK(c4.n_unit == 2);
    CHECK(c4.n_idem == 2);
    CHECK(c4.n_reg == 3);
    CHECK(c4.n_nil == 2);
    CHECK(c4.n_jac == 2);
    CHECK(c4.trivial_idempotents_only);
    CHECK(!c4.two_invertible);

    auto c5 = analyze(make_zn(5)).census;
    CHECK(c5.n_unit == 4);
    CHECK(c5.no_zero_divisors);
    CHECK(c5.two_invertible);
    CHECK(c5.trivial_idempotents_only);
}

TEST_CASE("frozen witnesses in Z6") {
    auto A = analyze(make_zn(6));
    const ElementProfile& p2 = A.prof[2];
    REQUIRE(p2.clean_w.has_value());
    CHECK(p2.clean_w->part1 == 1);
    CHECK(p2.clean_w->part2 == 1);
    REQUIRE(p2.r_clean_w.has_value());
    CHECK(p2.r_clean_w->part1 == 1);  // lex-least (regular, idempotent)
    CHECK(p2.r_clean_w->part2 == 1);
    REQUIRE(p2.strongly_clean_w.has_value());
    REQUIRE(p2.exchange_w.has_value());
    CHECK(p2.exchange_w->e == 0);  // least idempotent first, plus branch preferred
    CHECK(p2.exchange_w->branch == 0);

    const ElementProfile& p3 = A.prof[3];
    REQUIRE(p3.clean_w.has_value());
    CHECK(p3.clean_w->part1 == 5);
    CHECK(p3.clean_w->part2 == 4);
    REQUIRE(p3.r_clean_w.has_value());
    CHECK(p3.r_clean_w->part1 == 0);  // 0 is regular and 3 is idempotent in Z6
    CHECK(p3.r_clean_w->part2 == 3);
}

TEST_CASE("element profile of a matrix nilpotent") {
    auto A = analyze(matrix_ring(make_zn(2), 2));
    Elem e12 = 2;
    const ElementProfile& p = A.prof[e12];
    CHECK(!p.unit);
    CHECK(!p.idempotent);
    CHECK(p.nilpotent);
    CHECK(p.nil_index == 2);
    CHECK(p.regular);
    const auto& R = *A.ring;
    CHECK(R.mul(R.mul(e12, p.reg_y), e12) == e12);
    CHECK(!p.central);
    CHECK(p.clean_w.has_value());
    CHECK(!A.census.abelian);
}

TEST_CASE("element lattice edges hold on mixed rings") {
    std::vector<RingPtr> rings = {
        make_zn(4), make_zn(6), make_zn(9), make_poly_quotient(2, "x^2"),
        matrix_ring(make_zn(2), 2), triangular_ring(make_zn(3)),
        truncated_skew_series(make_zn(2), {0, 1}, 3, "id"),
        direct_product({make_zn(2), make_zn(4)})};
    for (const auto& R : rings) {
        auto A = analyze(R);
        for (int x = 0; x < R->size; ++x) {
            const ElementProfile& p = A.prof[x];
            if (p.unit) CHECK(p.clean());
            if (p.idempotent) {
                CHECK(p.clean());
                CHECK(p.r_clean());
                CHECK(p.regular);
            }
            if (p.clean()) {
                CHECK(p.weakly_clean());
                CHECK(p.r_clean());
                CHECK(p.exchange());
            }
            if (p.strongly_clean()) CHECK(p.clean());
            if (p.r_clean()) CHECK(p.weakly_r_clean());
            if (p.exchange()) CHECK(p.weakly_exchange());
            if (p.unit) CHECK(p.regular);
            if (p.nilpotent && p.idempotent) CHECK(x == (int)R->zero);
        }
    }
}

TEST_CASE("star profile and frozen sasr1 witness on Z3") {
    auto z3 = make_zn(3);
    auto id3 = identity_involution(z3);
    REQUIRE(id3.has_value());
    auto A = analyze(z3, &*id3);
    CHECK(A.census.n_proj == 2);
    CHECK(A.census.star_label == "id");
    const ElementProfile& p0 = A.prof[0];
    REQUIRE(p0.sasr1_w.has_value());
    CHECK(p0.sasr1_w->part1 == 1);  // lex-least over (unit, self-adjoint root of 1)
    CHECK(p0.sasr1_w->part2 == 2);
    REQUIRE(p0.two_p_plus_one_w.has_value());
    CHECK(p0.two_p_plus_one_w->part1 == 2);
    CHECK(p0.two_p_plus_one_w->part2 == 0);
    CHECK(A.census.is_star_clean.has_value());
    CHECK(A.census.is_star_clean->value);
}

TEST_CASE("star lattice edges") {
    auto p22 = direct_product({make_zn(2), make_zn(2)});
    for (const auto& inv : standard_involutions(p22)) {
        auto A = analyze(p22, &inv);
        for (int x = 0; x < p22->size; ++x) {
            const ElementProfile& p = A.prof[x];
            if (p.projection) CHECK(p.idempotent);
            if (p.star_clean()) {
                CHECK(p.clean());
                CHECK(p.star_r_clean());
                CHECK(p.weakly_star_clean());
            }
            if (p.strongly_star_clean()) {
                CHECK(p.star_clean());
                CHECK(p.strongly_clean());
            }
        }
    }
}

TEST_CASE("g-family flags against frozen roots") {
    auto z6 = make_zn(6);
    auto g = make_int_poly(z6, {0, -1, 1}, "x^2-x");
    auto A = analyze(z6, nullptr, &g);
    CHECK(A.census.poly_text == "x^2-x");
    CHECK(A.census.n_root == 4);  // idempotents of Z6
    CHECK(A.roots == std::vector<Elem>{0, 1, 3, 4});
    CHECK(A.prof[3].g_root);
    CHECK(!A.prof[2].g_root);
    REQUIRE(A.census.is_g_r_clean.has_value());
    CHECK(A.census.is_g_r_clean->value);
    // with no roots nothing is g-clean
    auto g2 = make_int_poly(z6, {1, 1, 1}, "x^2+x+1");
    auto A2 = analyze(z6, nullptr, &g2);
    CHECK(A2.census.n_root == 0);
    REQUIRE(A2.census.is_g_clean.has_value());
    CHECK(!A2.census.is_g_clean->value);
    CHECK(A2.census.is_g_clean->witness == 0);
}

TEST_CASE("central polynomial guards") {
    auto m2 = matrix_ring(make_zn(2), 2);
    // coefficient E12 is not central
    CHECK_THROWS_AS(make_central_poly(m2, {0, 2, 9}, "bad"), InputError);
    CHECK_NOTHROW(make_central_poly(m2, {0, 9, 9}, "x^2+x"));
    auto z4 = make_zn(4);
    CHECK_THROWS_AS(make_int_poly(z4, {1}, "1"), InputError);         // degree 0
    CHECK_THROWS_AS(make_int_poly(z4, {1, 0, 4}, "4x^2+1"), InputError);  // trims to degree 0
    auto trimmed = make_int_poly(z4, {0, 1, 4}, "4x^2+x");
    CHECK(trimmed.degree() == 1);
}

TEST_CASE("weak root cover failure") {
    auto z4 = make_zn(4);
    auto S = basic_sets(*z4);
    auto g_empty = make_int_poly(z4, {2, 0, 1}, "x^2+2");
    auto roots = poly_roots(g_empty);
    CHECK(roots.empty());
    auto fail = weak_root_cover_failure(*z4, S.reg, roots);
    REQUIRE(fail.has_value());
    CHECK(*fail == 0);
    auto g_idem = make_int_poly(z4, {0, -1, 1}, "x^2-x");
    auto fine = weak_root_cover_failure(*z4, S.reg, poly_roots(g_idem));
    CHECK(!fine.has_value());
}

TEST_CASE("oracle equivalence on a mixed sample") {
    std::vector<RingPtr> rings = {make_zn(8), make_zn(12), make_poly_quotient(3, "x^2+1"),
                                  direct_product({make_zn(2), make_zn(4)}),
                                  matrix_ring(make_zn(2), 2), triangular_ring(make_zn(2))};
    for (const auto& R : rings) {
        auto A = analyze(R);
        for (int x = 0; x < R->size; ++x) {
            const ElementProfile& p = A.prof[x];
            INFO(R->provenance << " element " << x);
            CHECK(p.unit == oracle::is_unit(*R, (Elem)x));
            CHECK(p.idempotent == oracle::is_idempotent(*R, (Elem)x));
            CHECK(p.regular == oracle::is_regular(*R, (Elem)x));
            CHECK(p.nilpotent == oracle::is_nilpotent(*R, (Elem)x));
            CHECK(p.central == oracle::is_central(*R, (Elem)x));
            CHECK(p.clean() == oracle::clean(*R, (Elem)x));
            CHECK(p.weakly_clean() == oracle::weakly_clean(*R, (Elem)x));
            CHECK(p.strongly_clean() == oracle::strongly_clean(*R, (Elem)x));
            CHECK(p.r_clean() == oracle::r_clean(*R, (Elem)x));
            CHECK(p.weakly_r_clean() == oracle::weakly_r_clean(*R, (Elem)x));
            CHECK(p.exchange() == oracle::exchange(*R, (Elem)x));
            CHECK(p.weakly_exchange() == oracle::weakly_exchange(*R, (Elem)x));
        }
    }
}

TEST_CASE("oracle equivalence for star and g families") {
    auto p33 = direct_product({make_zn(3), make_zn(3)});
    auto sw = swap_involution(p33);
    REQUIRE(sw.has_value());
    auto g = make_int_poly(p33, {0, -1, 0, 1}, "x^3-x");
    auto A = analyze(p33, &*sw, &g);
    for (int x = 0; x < p33->size; ++x) {
        const ElementProfile& p = A.prof[x];
        INFO("element " << x);
        CHECK(p.projection == oracle::is_projection(*p33, *sw, (Elem)x));
        CHECK(p.star_clean() == oracle::star_clean(*p33, *sw, (Elem)x));
        CHECK(p.weakly_star_clean() == oracle::weakly_star_clean(*p33, *sw, (Elem)x));
        CHECK(p.strongly_star_clean() == oracle::strongly_star_clean(*p33, *sw, (Elem)x));
        CHECK(p.star_r_clean() == oracle::star_r_clean(*p33, *sw, (Elem)x));
        CHECK(p.sasr1() == oracle::sasr1(*p33, *sw, (Elem)x));
        CHECK(p.two_p_plus_one() == oracle::two_p_plus_one(*p33, *sw, (Elem)x));
        CHECK(p.g_root == oracle::is_root(*p33, g, (Elem)x));
        CHECK(p.g_clean() == oracle::g_clean(*p33, g, (Elem)x));
        CHECK(p.strongly_g_clean() == oracle::strongly_g_clean(*p33, g, (Elem)x));
        CHECK(p.g_r_clean() == oracle::g_r_clean(*p33, g, (Elem)x));
        CHECK(p.weakly_g_r_clean() == oracle::weakly_g_r_clean(*p33, g, (Elem)x));
    }
}

TEST_CASE("ring_census matches analyze") {
    auto R = make_zn(10);
    auto A = analyze(R);
    auto c = ring_census(R);
    CHECK(c.n_unit == A.census.n_unit);
    CHECK(c.is_clean.value == A.census.is_clean.value);
}
