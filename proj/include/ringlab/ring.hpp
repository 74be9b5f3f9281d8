#pragma once

// FiniteRing: a finite unital ring given by dense Cayley tables over element
// ids 0..size-1.  Tables are flattened row-major vectors; add(a,b) is
// add_tab[a*size+b].  Construction always validates the axioms (exhaustively
// up to Caps::full_validation_limit, sampled above) and throws
// ValidationError listing the first failing tuple per axiom.
//
// A ring remembers how it was made (ctor tag + ingredient rings + params);
// `provenance` is the canonical spec-DSL text and round-trips through the
// parser.  Derived structural rings (corner, quotient, center) also keep the
// embedding of their elements into the parent, which the structure-theorem
// checks use to compare computations on both sides.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "common.hpp"

namespace ringlab {

struct FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct FiniteRing {
    int size = 0;
    std::vector<Elem> add_tab;  // size*size
    std::vector<Elem> mul_tab;  // size*size
    Elem zero = 0;
    Elem one = 0;
    std::vector<Elem> neg_tab;            // additive inverse, derived
    std::vector<std::string> names;       // printable element names
    std::string provenance;               // canonical constructor text

    enum class Ctor {
        tables, zn, polyq, product, matrix, triangular,
        trunc, corner, quotient, center_sub, grading_part
    };
    Ctor ctor = Ctor::tables;
    std::vector<RingPtr> ingredients;     // factors / base / parent rings
    std::vector<int> params;              // ctor-specific integer parameters
    std::vector<Elem> twist;              // trunc: the coefficient twist map
    std::vector<Elem> parent_elem;        // corner/center/quotient: parent id
                                          // of each element (quotient: least
                                          // coset representative)

    Elem add(Elem a, Elem b) const { return add_tab[(std::size_t)a * size + b]; }
    Elem mul(Elem a, Elem b) const { return mul_tab[(std::size_t)a * size + b]; }
    Elem neg(Elem a) const { return neg_tab[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem pow(Elem a, long k) const {
        Elem acc = one;
        for (long i = 0; i < k; ++i) acc = mul(acc, a);
        return acc;
    }

    // k copies of 1 added together (k may be negative).
    Elem unit_multiple(long k) const {
        Elem acc = zero;
        long n = k >= 0 ? k : -k;
        for (long i = 0; i < n; ++i) acc = add(acc, one);
        return k >= 0 ? acc : neg(acc);
    }

    const std::string& name(Elem a) const { return names[a]; }

    bool same_tables(const FiniteRing& o) const {
        return size == o.size && zero == o.zero && one == o.one &&
               add_tab == o.add_tab && mul_tab == o.mul_tab;
    }
};

namespace detail {

inline void first_only(std::vector<Violation>& out, Violation v) {
    for (const auto& w : out)
        if (w.code == v.code) return;  // keep the first witness per axiom
    out.push_back(std::move(v));
}

} // namespace detail

// Validate raw tables.  Returns the list of violations (empty means the
// tables describe a unital ring).  Exhaustive triple scans are used up to
// caps.full_validation_limit; above that, additive structure and identities
// are still checked in full (O(n^2)) while the triple axioms are sampled
// with a fixed-seed generator so results stay reproducible.
inline std::vector<Violation> check_ring_tables(int size,
                                                const std::vector<Elem>& add,
                                                const std::vector<Elem>& mul,
                                                Elem zero, Elem one,
                                                const Caps& caps = default_caps()) {
    std::vector<Violation> out;
    auto bad = [&](Violation::Code c, std::vector<Elem> w, std::string d) {
        detail::first_only(out, Violation{c, std::move(w), std::move(d)});
    };

    if (size <= 0 || size > caps.global_cap) {
        bad(Violation::Code::BadShape, {}, "size out of range");
        return out;
    }
    const std::size_t n = (std::size_t)size;
    if (add.size() != n * n || mul.size() != n * n) {
        bad(Violation::Code::BadShape, {}, "table size mismatch");
        return out;
    }
    if (zero >= n || one >= n) {
        bad(Violation::Code::BadShape, {}, "zero/one id out of range");
        return out;
    }
    for (std::size_t i = 0; i < n * n; ++i)
        if (add[i] >= n || mul[i] >= n) {
            bad(Violation::Code::BadShape,
                {(Elem)(i / n), (Elem)(i % n)}, "table entry out of range");
            return out;
        }
    if (size == 1 || zero == one) {
        bad(Violation::Code::ZeroEqualsOne, {}, "the zero ring is excluded");
        return out;
    }

    auto A = [&](Elem a, Elem b) { return add[(std::size_t)a * n + b]; };
    auto M = [&](Elem a, Elem b) { return mul[(std::size_t)a * n + b]; };

    // additive identity, inverses, commutativity: always exhaustive
    for (Elem a = 0; a < n; ++a) {
        if (A(zero, a) != a || A(a, zero) != a) {
            bad(Violation::Code::NotAGroup, {a}, "0 is not an additive identity");
            break;
        }
    }
    for (Elem a = 0; a < n; ++a) {
        bool has_inv = false;
        for (Elem b = 0; b < n; ++b)
            if (A(a, b) == zero) { has_inv = true; break; }
        if (!has_inv) {
            bad(Violation::Code::NotAGroup, {a}, "no additive inverse");
            break;
        }
    }
    for (Elem a = 0; a < n && out.empty(); ++a)
        for (Elem b = (Elem)(a + 1); b < n; ++b)
            if (A(a, b) != A(b, a)) {
                bad(Violation::Code::NotAGroup, {a, b}, "addition not commutative");
                a = (Elem)n; break;
            }

    for (Elem a = 0; a < n; ++a)
        if (M(one, a) != a || M(a, one) != a) {
            bad(Violation::Code::BadIdentity, {a}, "1 is not a multiplicative identity");
            break;
        }

    auto scan_triple = [&](auto&& body) {
        if (size <= caps.full_validation_limit) {
            for (Elem a = 0; a < n; ++a)
                for (Elem b = 0; b < n; ++b)
                    for (Elem c = 0; c < n; ++c)
                        if (!body(a, b, c)) return;
        } else {
            std::mt19937 rng(0x5eedu);
            std::uniform_int_distribution<int> d(0, size - 1);
            for (long i = 0; i < caps.sample_triples; ++i)
                if (!body((Elem)d(rng), (Elem)d(rng), (Elem)d(rng))) return;
        }
    };

    scan_triple([&](Elem a, Elem b, Elem c) {
        if (A(A(a, b), c) != A(a, A(b, c))) {
            bad(Violation::Code::NotAGroup, {a, b, c}, "addition not associative");
            return false;
        }
        return true;
    });
    scan_triple([&](Elem a, Elem b, Elem c) {
        if (M(M(a, b), c) != M(a, M(b, c))) {
            bad(Violation::Code::NotAssociative, {a, b, c}, "multiplication not associative");
            return false;
        }
        return true;
    });
    scan_triple([&](Elem a, Elem b, Elem c) {
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) {
            bad(Violation::Code::NotDistributive, {a, b, c}, "left distributivity fails");
            return false;
        }
        return true;
    });
    scan_triple([&](Elem a, Elem b, Elem c) {
        if (M(A(a, b), c) != A(M(a, c), M(b, c))) {
            bad(Violation::Code::NotDistributive, {a, b, c}, "right distributivity fails");
            return false;
        }
        return true;
    });
    return out;
}

// Build a ring from raw tables, validating first.  Names default to decimal
// ids when not supplied.  Throws ValidationError on any axiom failure.
inline RingPtr build_ring(int size,
                          std::vector<Elem> add,
                          std::vector<Elem> mul,
                          Elem zero, Elem one,
                          std::vector<std::string> names = {},
                          std::string provenance = {},
                          const Caps& caps = default_caps()) {
    auto viol = check_ring_tables(size, add, mul, zero, one, caps);
    if (!viol.empty()) {
        std::string msg = "ring table validation failed:";
        for (const auto& v : viol) {
            msg += " [";
            msg += violation_name(v.code);
            if (!v.detail.empty()) msg += ": " + v.detail;
            if (!v.where.empty()) {
                msg += " at (";
                for (std::size_t i = 0; i < v.where.size(); ++i)
                    msg += (i ? "," : "") + std::to_string(v.where[i]);
                msg += ")";
            }
            msg += "]";
        }
        throw ValidationError(msg, std::move(viol));
    }
    auto r = std::make_shared<FiniteRing>();
    r->size = size;
    r->add_tab = std::move(add);
    r->mul_tab = std::move(mul);
    r->zero = zero;
    r->one = one;
    r->neg_tab.resize(size);
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            if (r->add_tab[(std::size_t)a * size + b] == zero) { r->neg_tab[a] = b; break; }
    if (names.empty()) {
        names.resize(size);
        for (int i = 0; i < size; ++i) names[i] = std::to_string(i);
    }
    r->names = std::move(names);
    r->provenance = provenance.empty() ? "tables(" + std::to_string(size) + ")"
                                       : std::move(provenance);
    return r;
}

} // namespace ringlab
