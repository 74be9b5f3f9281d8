#include <catch2/catch_amalgamated.hpp>

#include <ringlab/construct.hpp>
#include <ringlab/grading.hpp>
#include <ringlab/ideal.hpp>
#include <ringlab/map.hpp>

#include "oracle.hpp"

using namespace ringlab;

TEST_CASE("jacobson radical on reference rings") {
    CHECK(jacobson_radical(make_zn(4)).members == std::vector<Elem>{0, 2});
    CHECK(jacobson_radical(make_zn(6)).members == std::vector<Elem>{0});
    CHECK(jacobson_radical(make_zn(8)).members == std::vector<Elem>{0, 2, 4, 6});
    CHECK(jacobson_radical(matrix_ring(make_zn(2), 2)).members == std::vector<Elem>{0});
    // upper triangular: J = strictly upper part
    CHECK(jacobson_radical(triangular_ring(make_zn(2))).members == std::vector<Elem>{0, 2});
}

TEST_CASE("jacobson radical matches the naive definition") {
    for (int n : {4, 6, 9, 12}) {
        auto R = make_zn(n);
        auto J = jacobson_radical(R);
        for (int x = 0; x < R->size; ++x)
            CHECK(J.contains((Elem)x) == oracle::in_jacobson(*R, (Elem)x));
    }
}

TEST_CASE("regular ideal detection") {
    auto z6 = make_zn(6);
    auto z4 = make_zn(4);
    CHECK(!regular_ideal_failure(ideal_closure(z6, {3})).has_value());
    CHECK(!regular_ideal_failure(ideal_closure(z6, {2})).has_value());
    auto fail = regular_ideal_failure(ideal_closure(z4, {2}));
    REQUIRE(fail.has_value());
    CHECK(*fail == 2);
    CHECK(is_regular_ideal(ideal_closure(z6, {3})));
    CHECK(!is_regular_ideal(ideal_closure(z4, {2})));
}

TEST_CASE("idempotents lift along small quotients") {
    auto z4 = make_zn(4);
    auto rep = idempotents_lift(ideal_closure(z4, {2}));
    CHECK(rep.all_lift);
    CHECK(rep.checked == 4);  // every x in Z4 has x^2 - x in {0,2}
    auto z6 = make_zn(6);
    auto rep6 = idempotents_lift(ideal_closure(z6, {3}));
    CHECK(rep6.all_lift);
    CHECK(!rep6.failing.has_value());
}

TEST_CASE("quotient map is a surjective hom") {
    auto R = make_zn(6);
    auto I = ideal_closure(R, {2});
    auto Q = quotient_ring(I);
    REQUIRE(Q->size == 2);
    auto theta = quotient_map(I, Q);
    CHECK(!check_ring_hom(*R, *Q, theta.img).has_value());
    CHECK(is_surjective(*Q, theta.img));
    CHECK(theta(0) == 0);
    CHECK(theta(2) == 0);
    CHECK(theta(3) == 1);
}

TEST_CASE("check_ring_hom flags a broken table") {
    auto R = make_zn(6);
    auto Q = make_zn(3);
    std::vector<Elem> good = {0, 1, 2, 0, 1, 2};
    CHECK(!check_ring_hom(*R, *Q, good).has_value());
    std::vector<Elem> bad = {0, 1, 2, 0, 2, 2};
    auto err = check_ring_hom(*R, *Q, bad);
    REQUIRE(err.has_value());
    CHECK(!err->empty());
}

TEST_CASE("endomorphism census") {
    CHECK(endomorphisms(make_zn(6)).size() == 1);
    CHECK(endomorphisms(make_zn(7)).size() == 1);
    CHECK(endomorphisms(make_poly_quotient(2, "x^2+x+1")).size() == 2);
    CHECK(endomorphisms(direct_product({make_zn(2), make_zn(2)})).size() == 4);
    Caps tight;
    tight.endo_limit = 4;
    CHECK_THROWS_AS(endomorphisms(make_zn(6), tight), CapError);
}

TEST_CASE("frobenius map exists exactly in prime characteristic") {
    auto fr4 = frobenius_map(make_poly_quotient(2, "x^2+x+1"));
    REQUIRE(fr4.has_value());
    CHECK(fr4->img == std::vector<Elem>{0, 1, 3, 2});
    CHECK(frobenius_map(make_zn(3)).has_value());   // identity map x -> x^3
    CHECK(!frobenius_map(make_zn(6)).has_value());  // characteristic not prime
}

TEST_CASE("natural gradings validate and expose part zero") {
    auto T = truncated_skew_series(make_zn(2), {0, 1}, 2, "id");
    auto gs = natural_gradings(T);
    REQUIRE(!gs.empty());
    const auto& g = gs[0];
    CHECK(grading_validate(g).empty());
    auto P0 = grading_part_zero(g);
    CHECK(P0->size == 2);  // the constants

    auto Tri = triangular_ring(make_zn(2));
    auto gt = natural_gradings(Tri);
    REQUIRE(!gt.empty());
    CHECK(grading_validate(gt[0]).empty());
    CHECK(grading_part_zero(gt[0])->size == 4);  // diagonal pairs
}

TEST_CASE("grading_validate reports failures") {
    auto R = make_zn(4);
    Grading bad;
    bad.ring = R;
    bad.parts = {{0, 1}, {2, 3}};  // {2,3} is not even a subgroup
    bad.modulus = 2;
    bad.label = "bogus";
    CHECK(!grading_validate(bad).empty());
}

TEST_CASE("ideal describe caps its element list") {
    auto R = make_zn(36);
    auto I = ideal_closure(R, {2});
    CHECK(I.size() == 18);
    auto text = I.describe();
    CHECK(text.find("...") != std::string::npos);
}
