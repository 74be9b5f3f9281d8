#pragma once

// Ring-spec expression parser.  The grammar mirrors the provenance strings the
// constructors emit, so emit(parse(s)).canonical round-trips:
//
//   spec  := ctor '(' args ')'
//   ctor  := Zn | polyq | product | M | tri | trunc | corner | quot | center | star
//   arg   := spec | number | #id | "quoted name or polynomial" | bare word
//
// star(...) is only meaningful outermost; polynomial literals may be quoted or
// bare (canonical form is bare, matching provenance).

#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "construct.hpp"
#include "ideal.hpp"
#include "ring.hpp"
#include "star.hpp"

namespace ringlab {

struct ParseError : InputError {
    using InputError::InputError;
};
struct UnknownConstructorError : ParseError {
    using ParseError::ParseError;
};
struct ArityError : ParseError {
    using ParseError::ParseError;
};

struct ParsedSpec {
    RingPtr ring;
    std::optional<Involution> star;
    std::string canonical;
};

namespace dsl_detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw ParseError("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    std::string ident() {
        skip_ws();
        std::size_t s = pos;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_' || text[pos] == ':'))
            ++pos;
        if (pos == s) fail("expected an identifier");
        return text.substr(s, pos - s);
    }
    long number() {
        skip_ws();
        std::size_t s = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == s || (pos == s + 1 && !std::isdigit((unsigned char)text[s])))
            fail("expected a number");
        return std::stol(text.substr(s, pos - s));
    }
    std::string quoted() {
        skip_ws();
        if (pos >= text.size() || text[pos] != '"') fail("expected a quoted string");
        ++pos;
        std::size_t s = pos;
        while (pos < text.size() && text[pos] != '"') ++pos;
        if (pos >= text.size()) fail("unterminated quoted string");
        std::string out = text.substr(s, pos - s);
        ++pos;
        return out;
    }
    // bare token up to ',' or ')' at the current nesting level, trimmed
    std::string bare() {
        skip_ws();
        std::size_t s = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (c == ',' && depth == 0) break;
            ++pos;
        }
        std::size_t e = pos;
        while (e > s && std::isspace((unsigned char)text[e - 1])) --e;
        if (e == s) fail("expected an argument");
        return text.substr(s, e - s);
    }
};

inline Elem element_arg(Cursor& cur, const RingPtr& ring) {
    cur.skip_ws();
    if (cur.peek() == '#') {
        ++cur.pos;
        long id = cur.number();
        if (id < 0 || id >= ring->size)
            cur.fail("element id #" + std::to_string(id) + " out of range for " +
                     ring->provenance);
        return (Elem)id;
    }
    std::string name = cur.peek() == '"' ? cur.quoted() : cur.bare();
    for (Elem x = 0; x < ring->size; ++x)
        if (ring->name(x) == name) return x;
    cur.fail("no element named '" + name + "' in " + ring->provenance);
}

inline RingPtr parse_node(Cursor& cur, const Caps& caps);

inline std::vector<Elem> identity_tab(const RingPtr& r) {
    std::vector<Elem> t(r->size);
    for (Elem i = 0; i < r->size; ++i) t[i] = i;
    return t;
}

} // namespace dsl_detail

// Resolve one of the named involutions (id, swap, transpose, frobenius,
// enumerated:<k>) on a ring; throws ParseError when the name does not denote
// an involution of this ring.
inline Involution resolve_involution(const RingPtr& ring, const std::string& name,
                                     const Caps& caps = default_caps()) {
    std::optional<Involution> inv;
    if (name == "id") inv = identity_involution(ring);
    else if (name == "swap") inv = swap_involution(ring);
    else if (name == "transpose") inv = transpose_involution(ring);
    else if (name == "frobenius") inv = frobenius_involution(ring);
    else if (name.rfind("enumerated:", 0) == 0) {
        long k = -1;
        try {
            k = std::stol(name.substr(11));
        } catch (...) {
            throw ParseError("bad involution index in '" + name + "'");
        }
        auto all = enumerate_involutions(ring, caps);
        if (k < 0 || k >= (long)all.size())
            throw ParseError("involution index " + std::to_string(k) +
                             " out of range (ring has " + std::to_string(all.size()) +
                             " involutions)");
        inv = all[k];
    } else {
        throw ParseError("unknown involution '" + name +
                         "' (expected id, swap, transpose, frobenius, or enumerated:<k>)");
    }
    if (!inv)
        throw ParseError("'" + name + "' is not an involution of " + ring->provenance);
    return *inv;
}

namespace dsl_detail {

inline Involution named_involution(Cursor& cur, const RingPtr& ring, const std::string& name,
                                   const Caps& caps) {
    try {
        return resolve_involution(ring, name, caps);
    } catch (const ParseError& e) {
        cur.fail(e.what());
    }
}

inline RingPtr parse_node(Cursor& cur, const Caps& caps) {
    std::string ctor = cur.ident();
    if (ctor == "star")
        cur.fail("star(...) is only allowed as the outermost constructor");
    cur.expect('(');
    RingPtr out;
    if (ctor == "Zn") {
        long n = cur.number();
        out = make_zn((int)n, caps);
    } else if (ctor == "polyq") {
        long n = cur.number();
        cur.expect(',');
        std::string poly = cur.peek() == '"' ? cur.quoted() : cur.bare();
        out = make_poly_quotient((int)n, poly, caps);
    } else if (ctor == "product") {
        std::vector<RingPtr> factors;
        factors.push_back(parse_node(cur, caps));
        while (cur.eat(',')) factors.push_back(parse_node(cur, caps));
        if (factors.size() < 2) throw ArityError("product(...) needs at least two factors");
        out = direct_product(factors, caps);
    } else if (ctor == "M") {
        RingPtr base = parse_node(cur, caps);
        cur.expect(',');
        long k = cur.number();
        out = matrix_ring(base, (int)k, caps);
    } else if (ctor == "tri") {
        out = triangular_ring(parse_node(cur, caps), caps);
    } else if (ctor == "trunc") {
        RingPtr base = parse_node(cur, caps);
        cur.expect(',');
        std::string twist = cur.ident();
        cur.expect(',');
        long N = cur.number();
        if (twist == "id") {
            out = truncated_skew_series(base, identity_tab(base), (int)N, "id", caps);
        } else if (twist == "frobenius") {
            auto fr = frobenius_map(base);
            if (!fr) cur.fail("frobenius is not an endomorphism of " + base->provenance);
            out = truncated_skew_series(base, fr->img, (int)N, "frobenius", caps);
        } else {
            cur.fail("unknown twist '" + twist + "' (expected id or frobenius)");
        }
    } else if (ctor == "corner") {
        RingPtr parent = parse_node(cur, caps);
        cur.expect(',');
        Elem e = element_arg(cur, parent);
        out = corner_ring(parent, e, caps);
    } else if (ctor == "quot") {
        RingPtr parent = parse_node(cur, caps);
        std::vector<Elem> gens;
        while (cur.eat(',')) gens.push_back(element_arg(cur, parent));
        if (gens.empty()) throw ArityError("quot(...) needs at least one generator");
        Ideal I = ideal_closure(parent, gens);
        out = quotient_ring(I, caps);
    } else if (ctor == "center") {
        out = center_ring(parse_node(cur, caps), caps);
    } else {
        throw UnknownConstructorError("unknown constructor '" + ctor + "'");
    }
    cur.expect(')');
    return out;
}

} // namespace dsl_detail

inline ParsedSpec parse_ring_spec(const std::string& text, const Caps& caps = default_caps()) {
    dsl_detail::Cursor cur{text, 0};
    ParsedSpec out;
    cur.skip_ws();
    std::size_t mark = cur.pos;
    std::string head = cur.ident();
    if (head == "star") {
        cur.expect('(');
        out.ring = dsl_detail::parse_node(cur, caps);
        cur.expect(',');
        std::string name = cur.ident();
        out.star = dsl_detail::named_involution(cur, out.ring, name, caps);
        cur.expect(')');
        out.canonical = "star(" + out.ring->provenance + ", " + out.star->label + ")";
    } else {
        cur.pos = mark;
        out.ring = dsl_detail::parse_node(cur, caps);
        out.canonical = out.ring->provenance;
    }
    cur.skip_ws();
    if (cur.pos != text.size()) cur.fail("trailing input after spec");
    return out;
}

} // namespace ringlab
