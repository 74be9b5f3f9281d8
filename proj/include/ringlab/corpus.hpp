#pragma once

// The desk-scale corpus: a deterministic list of constructor-built rings
// with attached involutions and polynomials, plus the flat boolean witness
// query language that runs over it.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "common.hpp"
#include "construct.hpp"
#include "poly_parse.hpp"
#include "ring.hpp"
#include "star.hpp"

namespace ringlab {

struct CorpusEntry {
    RingPtr ring;
    std::vector<Involution> involutions;
    std::vector<CentralPolynomial> polynomials;
    std::vector<std::string> tags;
};

namespace detail {

inline void attach(CorpusEntry& e, const Caps& caps) {
    e.involutions = standard_involutions(e.ring);
    if (e.ring->size <= caps.enum_involutions_limit) {
        for (auto& inv : enumerate_involutions(e.ring, caps)) {
            bool dup = false;
            for (const auto& have : e.involutions)
                if (have.tab == inv.tab) { dup = true; break; }
            if (!dup) e.involutions.push_back(std::move(inv));
        }
    }
    e.polynomials.push_back(make_int_poly(e.ring, {0, -1, 1}, "x^2-x"));
    e.polynomials.push_back(make_int_poly(e.ring, {0, 1, 1}, "x^2+x"));
    e.polynomials.push_back(make_int_poly(e.ring, {0, -1, 0, 1}, "x^3-x"));
}

} // namespace detail

// Deterministic generation; caps shrink the corpus but never fail it.
inline std::vector<CorpusEntry> corpus_generate(const Caps& caps = default_caps()) {
    std::vector<CorpusEntry> out;
    auto add = [&](RingPtr r, std::string tag) {
        if (!r || r->size > caps.max_ring_size) return;
        CorpusEntry e;
        e.ring = std::move(r);
        e.tags = {std::move(tag)};
        detail::attach(e, caps);
        out.push_back(std::move(e));
    };
    auto guarded = [&](std::function<RingPtr()> make, std::string tag) {
        try {
            add(make(), std::move(tag));
        } catch (const CapError&) { /* cap filters, never fails */ }
    };

    for (int n = 2; n <= 36; ++n)
        guarded([&] { return make_zn(n); }, "zn");

    for (int n : {2, 3, 4}) {
        for (int c = 0; c < n; ++c) {
            std::string f = render_poly({(long)c, 1});
            guarded([&] { return make_poly_quotient(n, f); }, "polyq");
        }
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::string f = render_poly({(long)c, (long)b, 1});
                guarded([&] { return make_poly_quotient(n, f); }, "polyq");
            }
    }

    // product seeds; unordered pairs with repetition
    std::vector<std::function<RingPtr()>> seeds = {
        [&] { return make_zn(2); },
        [&] { return make_zn(3); },
        [&] { return make_zn(4); },
        [&] { return make_zn(6); },
        [&] { return make_poly_quotient(2, "x^2+x+1"); },  // F_4
        [&] { return make_poly_quotient(2, "x^2"); },
    };
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i; j < seeds.size(); ++j)
            guarded([&] { return direct_product({seeds[i](), seeds[j]()}); }, "product");
    guarded([&] { return direct_product({make_zn(4), make_zn(9)}); }, "product");
    guarded([&] { return direct_product({make_zn(2), make_zn(2), make_zn(2)}); }, "product");
    guarded([&] { return direct_product({make_zn(2), make_zn(2), make_zn(2), make_zn(2)}); },
            "product");
    guarded([&] { return direct_product({direct_product({make_zn(2), make_zn(2)}), make_zn(3)}); },
            "product");

    guarded([&] { return matrix_ring(make_zn(2), 2); }, "matrix");
    guarded([&] { return matrix_ring(make_zn(3), 2); }, "matrix");

    guarded([&] { return triangular_ring(make_zn(2)); }, "triangular");
    guarded([&] { return triangular_ring(make_zn(3)); }, "triangular");

    for (int N : {2, 3}) {
        guarded([&] {
            auto b = make_zn(2);
            std::vector<Elem> idt(b->size);
            for (Elem i = 0; i < b->size; ++i) idt[i] = i;
            return truncated_skew_series(b, idt, N, "id");
        }, "trunc");
        guarded([&] {
            auto b = make_zn(3);
            std::vector<Elem> idt(b->size);
            for (Elem i = 0; i < b->size; ++i) idt[i] = i;
            return truncated_skew_series(b, idt, N, "id");
        }, "trunc");
        guarded([&] {
            auto b = make_poly_quotient(2, "x^2+x+1");
            std::vector<Elem> idt(b->size);
            for (Elem i = 0; i < b->size; ++i) idt[i] = i;
            return truncated_skew_series(b, idt, N, "id");
        }, "trunc");
        guarded([&] {
            auto b = make_poly_quotient(2, "x^2+x+1");
            auto fr = frobenius_map(b);
            if (!fr) throw CapError("no frobenius");
            return truncated_skew_series(b, fr->img, N, "frobenius");
        }, "trunc");
    }
    return out;
}

// ---------------------------------------------------------------------------
// witness queries

struct QueryAtom {
    bool negated = false;
    bool elem_scope = false;
    std::string flag;
};

struct WitnessQuery {
    std::vector<QueryAtom> atoms;
    std::string ring_filter;  // exact provenance; empty = whole corpus
    bool needs_star = false;
    bool needs_poly = false;
    bool elem_level = false;

    // Scope prefixes persist across '&', so the canonical text only names a
    // scope where it changes (ring scope is the initial default).
    std::string canonical() const {
        std::string s;
        bool cur = false;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (i) s += " & ";
            if (atoms[i].elem_scope != cur) {
                s += atoms[i].elem_scope ? "element: " : "ring: ";
                cur = atoms[i].elem_scope;
            }
            if (atoms[i].negated) s += "!";
            s += atoms[i].flag;
        }
        return s;
    }
};

namespace detail {

inline const std::vector<std::string>& ring_flag_names() {
    static const std::vector<std::string> v = {
        "commutative", "abelian", "boolean", "no_zero_divisors", "two_invertible",
        "trivial_idempotents_only", "is_clean", "is_weakly_clean", "is_r_clean",
        "is_weakly_r_clean", "is_exchange", "is_weakly_exchange", "is_strongly_clean",
        "is_star_clean", "is_weakly_star_clean", "is_star_r_clean",
        "is_g_clean", "is_g_r_clean", "is_weakly_g_r_clean"};
    return v;
}

inline const std::vector<std::string>& elem_flag_names() {
    static const std::vector<std::string> v = {
        "unit", "idempotent", "regular", "nilpotent", "central", "in_jacobson",
        "clean", "weakly_clean", "weakly_clean_t1", "weakly_clean_t2", "strongly_clean",
        "r_clean", "weakly_r_clean", "weakly_r_clean_t1", "weakly_r_clean_t2",
        "exchange", "weakly_exchange", "exchange_left", "weakly_exchange_left",
        "projection", "star_clean", "weakly_star_clean", "weakly_star_clean_t1",
        "weakly_star_clean_t2", "strongly_star_clean", "star_r_clean",
        "sasr1_decomp", "two_p_plus_one_decomp",
        "g_root", "g_clean", "strongly_g_clean", "g_r_clean", "weakly_g_r_clean",
        "weakly_g_r_clean_t1", "weakly_g_r_clean_t2"};
    return v;
}

inline bool star_flag(const std::string& f) {
    return f.find("star") != std::string::npos || f == "projection" ||
           f == "sasr1_decomp" || f == "two_p_plus_one_decomp";
}

inline bool g_flag(const std::string& f) {
    return f.rfind("is_g_", 0) == 0 || f.rfind("g_", 0) == 0 ||
           f.find("_g_r_clean") != std::string::npos || f == "strongly_g_clean";
}

inline bool eval_ring_flag(const Census& c, const std::string& f) {
    if (f == "commutative") return c.commutative;
    if (f == "abelian") return c.abelian;
    if (f == "boolean") return c.boolean_ring;
    if (f == "no_zero_divisors") return c.no_zero_divisors;
    if (f == "two_invertible") return c.two_invertible;
    if (f == "trivial_idempotents_only") return c.trivial_idempotents_only;
    if (f == "is_clean") return c.is_clean.value;
    if (f == "is_weakly_clean") return c.is_weakly_clean.value;
    if (f == "is_r_clean") return c.is_r_clean.value;
    if (f == "is_weakly_r_clean") return c.is_weakly_r_clean.value;
    if (f == "is_exchange") return c.is_exchange.value;
    if (f == "is_weakly_exchange") return c.is_weakly_exchange.value;
    if (f == "is_strongly_clean") return c.is_strongly_clean.value;
    if (f == "is_star_clean") return c.is_star_clean->value;
    if (f == "is_weakly_star_clean") return c.is_weakly_star_clean->value;
    if (f == "is_star_r_clean") return c.is_star_r_clean->value;
    if (f == "is_g_clean") return c.is_g_clean->value;
    if (f == "is_g_r_clean") return c.is_g_r_clean->value;
    if (f == "is_weakly_g_r_clean") return c.is_weakly_g_r_clean->value;
    throw InputError("unknown ring flag '" + f + "'");
}

inline bool eval_elem_flag(const ElementProfile& p, const std::string& f) {
    if (f == "unit") return p.unit;
    if (f == "idempotent") return p.idempotent;
    if (f == "regular") return p.regular;
    if (f == "nilpotent") return p.nilpotent;
    if (f == "central") return p.central;
    if (f == "in_jacobson") return p.in_jacobson;
    if (f == "clean") return p.clean();
    if (f == "weakly_clean") return p.weakly_clean();
    if (f == "weakly_clean_t1") return p.weakly_clean_t1();
    if (f == "weakly_clean_t2") return p.weakly_clean_t2();
    if (f == "strongly_clean") return p.strongly_clean();
    if (f == "r_clean") return p.r_clean();
    if (f == "weakly_r_clean") return p.weakly_r_clean();
    if (f == "weakly_r_clean_t1") return p.weakly_r_clean_t1();
    if (f == "weakly_r_clean_t2") return p.weakly_r_clean_t2();
    if (f == "exchange") return p.exchange();
    if (f == "weakly_exchange") return p.weakly_exchange();
    if (f == "exchange_left") return p.exchange_left();
    if (f == "weakly_exchange_left") return p.weakly_exchange_left();
    if (f == "projection") return p.projection;
    if (f == "star_clean") return p.star_clean();
    if (f == "weakly_star_clean") return p.weakly_star_clean();
    if (f == "weakly_star_clean_t1") return p.weakly_star_clean_t1();
    if (f == "weakly_star_clean_t2") return p.weakly_star_clean_t2();
    if (f == "strongly_star_clean") return p.strongly_star_clean();
    if (f == "star_r_clean") return p.star_r_clean();
    if (f == "sasr1_decomp") return p.sasr1();
    if (f == "two_p_plus_one_decomp") return p.two_p_plus_one();
    if (f == "g_root") return p.g_root;
    if (f == "g_clean") return p.g_clean();
    if (f == "strongly_g_clean") return p.strongly_g_clean();
    if (f == "g_r_clean") return p.g_r_clean();
    if (f == "weakly_g_r_clean") return p.weakly_g_r_clean();
    if (f == "weakly_g_r_clean_t1") return p.weakly_g_r_clean_t1();
    if (f == "weakly_g_r_clean_t2") return p.weakly_g_r_clean_t2();
    throw InputError("unknown element flag '" + f + "'");
}

} // namespace detail

// Grammar: atom ('&' atom)*; atom := '!'? ('ring:' | 'element:' | 'elem:')? flag
inline WitnessQuery parse_query(const std::string& text) {
    WitnessQuery q;
    std::size_t i = 0;
    bool cur_elem = false;  // a scope prefix persists until overridden
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    for (;;) {
        skip();
        if (i >= text.size()) break;
        if (!q.atoms.empty()) {
            if (text[i] != '&') throw InputError("query parse error: expected '&' at column " +
                                                 std::to_string(i + 1));
            ++i;
            skip();
        }
        QueryAtom a;
        a.elem_scope = cur_elem;
        if (i < text.size() && text[i] == '!') { a.negated = true; ++i; skip(); }
        std::size_t start = i;
        while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_' ||
                                   text[i] == ':'))
            ++i;
        std::string tok = text.substr(start, i - start);
        if (tok.empty()) throw InputError("query parse error: expected a flag at column " +
                                          std::to_string(start + 1));
        auto colon = tok.find(':');
        if (colon != std::string::npos) {
            std::string scope = tok.substr(0, colon);
            tok = tok.substr(colon + 1);
            if (tok.empty()) {  // "element: foo" with a space after the colon
                skip();
                if (i < text.size() && text[i] == '!') { a.negated = true; ++i; skip(); }
                start = i;
                while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
                    ++i;
                tok = text.substr(start, i - start);
            }
            if (scope == "element" || scope == "elem") a.elem_scope = true;
            else if (scope == "ring") a.elem_scope = false;
            else throw InputError("unknown query scope '" + scope + "'");
            cur_elem = a.elem_scope;
        }
        if (tok.empty()) throw InputError("query parse error: missing flag name");
        a.flag = tok;
        const auto& names = a.elem_scope ? detail::elem_flag_names() : detail::ring_flag_names();
        if (std::find(names.begin(), names.end(), a.flag) == names.end())
            throw InputError("unknown " + std::string(a.elem_scope ? "element" : "ring") +
                             " flag '" + a.flag + "'");
        q.atoms.push_back(std::move(a));
    }
    if (q.atoms.empty()) throw InputError("empty query");
    for (const auto& a : q.atoms) {
        if (detail::star_flag(a.flag)) q.needs_star = true;
        if (detail::g_flag(a.flag)) q.needs_poly = true;
        if (a.elem_scope) q.elem_level = true;
    }
    return q;
}

struct WitnessHit {
    std::string ring_desc;
    std::string star_label;  // empty if unstarred
    std::string poly_text;   // empty if none
    std::optional<Elem> elem;
    std::string elem_name;
};

struct SearchResult {
    std::vector<WitnessHit> hits;
    long entries_scanned = 0;
    long combos_scanned = 0;
    long elements_scanned = 0;
};

inline std::string starred_desc(const std::string& prov, const std::string& star_label) {
    if (star_label.empty()) return prov;
    return "star(" + prov + ", " + star_label + ")";
}

inline SearchResult find_witness(const WitnessQuery& q, const std::vector<CorpusEntry>& corpus) {
    SearchResult res;
    for (const auto& entry : corpus) {
        if (!q.ring_filter.empty() && entry.ring->provenance != q.ring_filter) continue;
        ++res.entries_scanned;
        // combos of optional attachments, driven by what the query mentions
        std::vector<const Involution*> stars;
        if (q.needs_star)
            for (const auto& inv : entry.involutions) stars.push_back(&inv);
        else
            stars.push_back(nullptr);
        std::vector<const CentralPolynomial*> polys;
        if (q.needs_poly)
            for (const auto& g : entry.polynomials) polys.push_back(&g);
        else
            polys.push_back(nullptr);

        for (const Involution* inv : stars)
            for (const CentralPolynomial* g : polys) {
                ++res.combos_scanned;
                Analysis A = analyze(entry.ring, inv, g);
                bool ring_part = true;
                for (const auto& a : q.atoms) {
                    if (a.elem_scope) continue;
                    bool v = detail::eval_ring_flag(A.census, a.flag);
                    if (v == a.negated) { ring_part = false; break; }
                }
                if (!ring_part) continue;
                if (!q.elem_level) {
                    WitnessHit h;
                    h.ring_desc = starred_desc(entry.ring->provenance,
                                               inv ? inv->label : "");
                    if (inv) h.star_label = inv->label;
                    if (g) h.poly_text = g->text;
                    res.hits.push_back(std::move(h));
                    continue;
                }
                for (Elem x = 0; x < entry.ring->size; ++x) {
                    ++res.elements_scanned;
                    bool all = true;
                    for (const auto& a : q.atoms) {
                        if (!a.elem_scope) continue;
                        bool v = detail::eval_elem_flag(A.prof[x], a.flag);
                        if (v == a.negated) { all = false; break; }
                    }
                    if (all) {
                        WitnessHit h;
                        h.ring_desc = starred_desc(entry.ring->provenance,
                                                   inv ? inv->label : "");
                        if (inv) h.star_label = inv->label;
                        if (g) h.poly_text = g->text;
                        h.elem = x;
                        h.elem_name = entry.ring->name(x);
                        res.hits.push_back(std::move(h));
                    }
                }
            }
    }
    return res;
}

} // namespace ringlab
