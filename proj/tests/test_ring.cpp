#include <catch2/catch_amalgamated.hpp>

#include <ringlab/construct.hpp>
#include <ringlab/ring.hpp>

#include "oracle.hpp"

using namespace ringlab;

TEST_CASE("Zn basics") {
    auto R = make_zn(6);
    CHECK(R->size == 6);
    CHECK(R->zero == 0);
    CHECK(R->one == 1);
    CHECK(R->provenance == "Zn(6)");
    CHECK(R->name(5) == "5");
    CHECK(R->add(4, 5) == 3);
    CHECK(R->mul(4, 5) == 2);
    CHECK(R->neg(2) == 4);
    CHECK(R->sub(1, 3) == 4);
    CHECK(R->pow(5, 2) == 1);
    CHECK(R->pow(2, 0) == 1);
    CHECK(R->unit_multiple(7) == 1);
    CHECK(R->unit_multiple(-1) == 5);
    CHECK(R->unit_multiple(0) == 0);
}

TEST_CASE("Zn guards") {
    CHECK_THROWS_AS(make_zn(1), InputError);
    CHECK_THROWS_AS(make_zn(0), InputError);
    CHECK_THROWS_AS(make_zn(5000), CapError);
    Caps tight;
    tight.global_cap = 10;
    CHECK_THROWS_AS(make_zn(11, tight), CapError);
    CHECK_NOTHROW(make_zn(10, tight));
}

TEST_CASE("build_ring validates tables") {
    // Z_3 tables, then break them one way at a time.
    auto zn3 = [](int a, int b, bool mul) {
        return (Elem)((mul ? a * b : a + b) % 3);
    };
    std::vector<Elem> add(9), mul(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            add[a * 3 + b] = zn3(a, b, false);
            mul[a * 3 + b] = zn3(a, b, true);
        }
    CHECK_NOTHROW(build_ring(3, add, mul, 0, 1));

    SECTION("wrong identity") {
        CHECK_THROWS_AS(build_ring(3, add, mul, 0, 2), ValidationError);
    }
    SECTION("broken additive commutativity") {
        auto bad = add;
        bad[1 * 3 + 2] = 0;  // 1+2 = 0 stays, but make it asymmetric
        bad[2 * 3 + 1] = 1;
        CHECK_THROWS_AS(build_ring(3, bad, mul, 0, 1), ValidationError);
    }
    SECTION("broken distributivity") {
        auto bad = mul;
        bad[2 * 3 + 2] = 0;  // 2*2 = 0 instead of 1
        CHECK_THROWS_AS(build_ring(3, add, bad, 0, 1), ValidationError);
        try {
            build_ring(3, add, bad, 0, 1);
        } catch (const ValidationError& e) {
            CHECK(!e.violations.empty());
            CHECK(std::string(e.what()).find("at (") != std::string::npos);
        }
    }
    SECTION("out-of-range entry") {
        auto bad = mul;
        bad[4] = 9;
        CHECK_THROWS_AS(build_ring(3, add, bad, 0, 1), ValidationError);
    }
    SECTION("size mismatch") {
        CHECK_THROWS_AS(build_ring(4, add, mul, 0, 1), ValidationError);
    }
}

TEST_CASE("zero ring is rejected") {
    std::vector<Elem> t(1, 0);
    CHECK_THROWS_AS(build_ring(1, t, t, 0, 0), ValidationError);
    CHECK_THROWS_AS(build_ring(0, {}, {}, 0, 0), ValidationError);
}

TEST_CASE("large ring uses sampled validation") {
    // 5^4 = 625 > full_validation_limit; construction must still succeed and
    // produce a working ring.
    auto R = make_poly_quotient(5, "x^4+x+1");
    REQUIRE(R->size == 625);
    CHECK(R->mul(R->one, 623) == 623);
    // x * x = x^2: ids are base-5 digit strings, x = 5, x^2 = 25
    CHECK(R->mul(5, 5) == 25);
}

TEST_CASE("names fall back to ids") {
    std::vector<Elem> add(4), mul(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            add[a * 2 + b] = (Elem)((a + b) % 2);
            mul[a * 2 + b] = (Elem)(a * b);
        }
    auto R = build_ring(2, add, mul, 0, 1);
    CHECK(R->name(0) == "0");
    CHECK(R->name(1) == "1");
    CHECK(R->provenance == "tables(2)");
}

TEST_CASE("negation table is consistent") {
    auto R = make_zn(12);
    for (int x = 0; x < R->size; ++x)
        CHECK(R->add((Elem)x, R->neg((Elem)x)) == R->zero);
}

TEST_CASE("same_tables compares structure") {
    auto A = make_zn(4);
    auto B = make_zn(4);
    auto C = make_zn(5);
    CHECK(A->same_tables(*B));
    CHECK(!A->same_tables(*C));
}

TEST_CASE("oracle agrees on Zn(6) basic sets") {
    auto R = make_zn(6);
    std::vector<Elem> units, idems, regs, nils;
    for (int x = 0; x < 6; ++x) {
        if (oracle::is_unit(*R, (Elem)x)) units.push_back((Elem)x);
        if (oracle::is_idempotent(*R, (Elem)x)) idems.push_back((Elem)x);
        if (oracle::is_regular(*R, (Elem)x)) regs.push_back((Elem)x);
        if (oracle::is_nilpotent(*R, (Elem)x)) nils.push_back((Elem)x);
    }
    CHECK(units == std::vector<Elem>{1, 5});
    CHECK(idems == std::vector<Elem>{0, 1, 3, 4});
    CHECK(regs == std::vector<Elem>{0, 1, 2, 3, 4, 5});
    CHECK(nils == std::vector<Elem>{0});
}
