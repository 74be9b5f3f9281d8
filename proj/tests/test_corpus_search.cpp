#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <ringlab/corpus.hpp>

using namespace ringlab;

namespace {

std::vector<std::string> provenances(const std::vector<CorpusEntry>& c) {
    std::vector<std::string> out;
    for (const auto& e : c) out.push_back(e.ring->provenance);
    return out;
}

}  // namespace

TEST_CASE("corpus generation is deterministic and seeded as documented") {
    Caps caps = default_caps();
    auto c1 = corpus_generate(caps);
    auto c2 = corpus_generate(caps);
    CHECK(provenances(c1) == provenances(c2));
    auto provs = provenances(c1);
    for (const char* want :
         {"Zn(2)", "Zn(36)", "polyq(2, 1+x+x^2)", "product(Zn(4), Zn(9))",
          "product(product(Zn(2), Zn(2)), Zn(3))", "M(Zn(2), 2)", "M(Zn(3), 2)", "tri(Zn(3))",
          "trunc(Zn(2), id, 2)", "trunc(polyq(2, 1+x+x^2), frobenius, 2)"}) {
        INFO(want);
        CHECK(std::find(provs.begin(), provs.end(), want) != provs.end());
    }
    // Z_2^4 appears as a quadruple product
    bool has16 = std::any_of(c1.begin(), c1.end(), [](const CorpusEntry& e) {
        return e.ring->provenance == "product(Zn(2), Zn(2), Zn(2), Zn(2))";
    });
    CHECK(has16);
}

TEST_CASE("corpus caps shrink but never fail") {
    Caps caps = default_caps();
    caps.max_ring_size = 16;
    auto small = corpus_generate(caps);
    CHECK(!small.empty());
    for (const auto& e : small) CHECK(e.ring->size <= 16);
    CHECK(small.size() < corpus_generate(default_caps()).size());
}

TEST_CASE("corpus entries carry involutions and the standard polynomials") {
    auto corpus = corpus_generate(default_caps());
    for (const auto& e : corpus) {
        REQUIRE(e.polynomials.size() == 3);
        CHECK(e.polynomials[0].text == "x^2-x");
        CHECK(e.polynomials[1].text == "x^2+x");
        CHECK(e.polynomials[2].text == "x^3-x");
        for (std::size_t i = 0; i < e.involutions.size(); ++i)
            for (std::size_t j = i + 1; j < e.involutions.size(); ++j)
                CHECK(e.involutions[i].tab != e.involutions[j].tab);
    }
    // commutative entries always get the identity involution first
    CHECK(!corpus[0].involutions.empty());
    CHECK(corpus[0].involutions[0].is_identity());
}

TEST_CASE("query parser handles scopes, negation, and errors") {
    auto q = parse_query("element: idempotent & !central");
    REQUIRE(q.atoms.size() == 2);
    CHECK(q.atoms[0].elem_scope);
    CHECK(q.atoms[1].elem_scope);  // scope persists across '&'
    CHECK(!q.atoms[0].negated);
    CHECK(q.atoms[1].negated);
    CHECK(q.elem_level);
    CHECK(q.canonical() == "element: idempotent & !central");

    auto q2 = parse_query("is_weakly_clean & !is_weakly_star_clean");
    CHECK(!q2.elem_level);
    CHECK(q2.needs_star);
    CHECK(!q2.needs_poly);
    CHECK(q2.canonical() == "is_weakly_clean & !is_weakly_star_clean");

    auto q3 = parse_query("element: unit & ring: is_clean & !is_exchange");
    REQUIRE(q3.atoms.size() == 3);
    CHECK(q3.atoms[0].elem_scope);
    CHECK(!q3.atoms[1].elem_scope);
    CHECK(!q3.atoms[2].elem_scope);
    CHECK(q3.canonical() == "element: unit & ring: is_clean & !is_exchange");

    // canonical text reparses to itself
    for (const auto* text : {"element: idempotent & !central",
                             "is_weakly_clean & !is_weakly_star_clean",
                             "element: unit & ring: is_clean & !is_exchange",
                             "element: g_root & unit"}) {
        CHECK(parse_query(parse_query(text).canonical()).canonical() ==
              parse_query(text).canonical());
    }

    CHECK_THROWS_AS(parse_query(""), InputError);
    CHECK_THROWS_AS(parse_query("element: is_clean"), InputError);  // ring flag, elem scope
    CHECK_THROWS_AS(parse_query("no_such_flag"), InputError);
    CHECK_THROWS_AS(parse_query("galaxy: unit"), InputError);
    CHECK_THROWS_AS(parse_query("unit idempotent"), InputError);  // missing '&'
}

TEST_CASE("poly flags set needs_poly") {
    auto q = parse_query("element: g_root & unit");
    CHECK(q.needs_poly);
    CHECK(!q.needs_star);
    CHECK(q.elem_level);
}

TEST_CASE("ring-level search finds the swap witness") {
    auto corpus = corpus_generate(default_caps());
    auto q = parse_query("is_weakly_clean & !is_weakly_star_clean");
    auto res = find_witness(q, corpus);
    REQUIRE(!res.hits.empty());
    bool found = std::any_of(res.hits.begin(), res.hits.end(), [](const WitnessHit& h) {
        return h.ring_desc == "star(product(Zn(2), Zn(2)), swap)";
    });
    CHECK(found);
    for (const auto& h : res.hits) CHECK(!h.elem.has_value());
    CHECK(res.entries_scanned > 0);
    CHECK(res.combos_scanned >= res.entries_scanned);
}

TEST_CASE("element-level search on a filtered ring") {
    auto corpus = corpus_generate(default_caps());
    auto q = parse_query("element: idempotent & !projection");
    q.ring_filter = "product(Zn(3), Zn(3))";
    auto res = find_witness(q, corpus);
    CHECK(res.entries_scanned == 1);
    CHECK(res.combos_scanned == 2);  // id and swap
    REQUIRE(res.hits.size() == 2);   // (1,0) and (0,1) under swap
    CHECK(res.hits[0].star_label == "swap");
    CHECK(res.hits[0].elem == 1);
    CHECK(res.hits[0].elem_name == "(1,0)");
    CHECK(res.hits[1].elem == 3);
}

TEST_CASE("poly combos are scanned only when needed") {
    auto corpus = corpus_generate(default_caps());
    auto q = parse_query("element: g_root & unit");
    q.ring_filter = "Zn(6)";
    auto res = find_witness(q, corpus);
    // x^2-x: unit root 1; x^2+x: unit root 5; x^3-x: unit roots 1 and 5
    REQUIRE(res.hits.size() == 4);
    CHECK(res.hits[0].poly_text == "x^2-x");
    CHECK(res.hits[0].elem == 1);
    CHECK(res.hits[1].poly_text == "x^2+x");
    CHECK(res.hits[1].elem == 5);
    CHECK(res.hits[2].poly_text == "x^3-x");
    CHECK(res.hits[3].poly_text == "x^3-x");
}

TEST_CASE("search with no matches returns empty hits") {
    auto corpus = corpus_generate(default_caps());
    // every ring in the corpus is clean (finite rings are clean)
    auto res = find_witness(parse_query("!is_clean"), corpus);
    CHECK(res.hits.empty());
    CHECK(res.entries_scanned == (long)corpus.size());
}
