#pragma once

// Two-sided ideals, quotient rings, and the Jacobson radical.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "construct.hpp"
#include "ring.hpp"

namespace ringlab {

struct Ideal {
    RingPtr ring;
    std::vector<Elem> members;  // sorted ids
    std::vector<char> mask;     // size = ring->size
    std::vector<Elem> gens;     // as supplied (empty for computed ideals)

    bool contains(Elem x) const { return mask[x] != 0; }
    int size() const { return (int)members.size(); }
    bool is_whole_ring() const { return size() == ring->size; }

    std::string describe() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members.size() && i < 8; ++i)
            s += (i ? "," : "") + ring->name(members[i]);
        if (members.size() > 8) s += ",...";
        return s + "}";
    }
};

// Smallest two-sided ideal containing `gens`.
inline Ideal ideal_closure(const RingPtr& ring, std::vector<Elem> gens) {
    const int n = ring->size;
    for (Elem g : gens)
        if (g >= n) throw InputError("ideal generator id out of range");
    std::vector<char> in(n, 0);
    std::vector<Elem> queue;
    auto push = [&](Elem x) {
        if (!in[x]) { in[x] = 1; queue.push_back(x); }
    };
    push(ring->zero);
    for (Elem g : gens) push(g);
    // close under r*m, m*r first, then under addition of members
    for (std::size_t q = 0; q < queue.size(); ++q) {
        Elem m = queue[q];
        push(ring->neg(m));
        for (Elem r = 0; r < n; ++r) {
            push(ring->mul(r, m));
            push(ring->mul(m, r));
        }
        for (std::size_t p = 0; p <= q; ++p) push(ring->add(m, queue[p]));
    }
    Ideal I;
    I.ring = ring;
    I.mask = std::move(in);
    for (Elem x = 0; x < n; ++x)
        if (I.mask[x]) I.members.push_back(x);
    I.gens = std::move(gens);
    return I;
}

// Treat an explicit subset as an ideal, verifying the ideal axioms.
inline Ideal ideal_from_subset(const RingPtr& ring, std::vector<Elem> subset) {
    Ideal I = ideal_closure(ring, subset);
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    bool has_zero = std::binary_search(subset.begin(), subset.end(), ring->zero);
    if (!has_zero || I.members != subset)
        throw InputError("subset is not a two-sided ideal");
    return I;
}

// R / I with cosets ordered (and named) by least representative.
inline RingPtr quotient_ring(const Ideal& I, const Caps& caps = default_caps()) {
    const RingPtr& parent = I.ring;
    if (I.is_whole_ring())
        throw InputError("quotient by the whole ring is the zero ring, which is excluded");
    const int n = parent->size;
    // least representative of each element's coset
    std::vector<Elem> rep(n);
    for (Elem x = 0; x < n; ++x) {
        Elem best = x;
        for (Elem i : I.members) best = std::min(best, parent->add(x, i));
        rep[x] = best;
    }
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);
    auto idx = [&](Elem parent_elem) {
        Elem r = rep[parent_elem];
        return (Elem)(std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
    };
    const int m = (int)reps.size();
    std::vector<Elem> add((std::size_t)m * m), mul((std::size_t)m * m);
    std::vector<std::string> names(m);
    for (int a = 0; a < m; ++a) {
        names[a] = "[" + parent->name(reps[a]) + "]";
        for (int b = 0; b < m; ++b) {
            add[(std::size_t)a * m + b] = idx(parent->add(reps[a], reps[b]));
            mul[(std::size_t)a * m + b] = idx(parent->mul(reps[a], reps[b]));
        }
    }
    std::string gens_txt;
    {
        // canonical generator list: the ideal's own generators if given,
        // otherwise all members
        const std::vector<Elem>& gs = I.gens.empty() ? I.members : I.gens;
        for (std::size_t i = 0; i < gs.size(); ++i)
            gens_txt += (i ? ", #" : "#") + std::to_string(gs[i]);
    }
    std::string prov = "quot(" + parent->provenance + ", " + gens_txt + ")";
    auto r = std::const_pointer_cast<FiniteRing>(
        build_ring(m, std::move(add), std::move(mul), idx(parent->zero), idx(parent->one),
                   std::move(names), prov, caps));
    r->ctor = FiniteRing::Ctor::quotient;
    r->ingredients = {parent};
    r->parent_elem = reps;
    for (Elem g : (I.gens.empty() ? I.members : I.gens)) r->params.push_back((int)g);
    return r;
}

// The canonical surjection R -> R/I.
inline RingMap quotient_map(const Ideal& I, const RingPtr& quot) {
    const RingPtr& parent = I.ring;
    std::vector<Elem> img(parent->size);
    for (Elem x = 0; x < parent->size; ++x) {
        Elem best = x;
        for (Elem i : I.members) best = std::min(best, parent->add(x, i));
        img[x] = (Elem)(std::lower_bound(quot->parent_elem.begin(), quot->parent_elem.end(), best) -
                        quot->parent_elem.begin());
    }
    return RingMap{parent, quot, std::move(img), "mod " + I.describe()};
}

// An ideal I is regular (in the von Neumann sense) when every a in I has a
// quasi-inverse inside I: a = a*b*a for some b in I.  Returns the least
// failing element, if any.
inline std::optional<Elem> regular_ideal_failure(const Ideal& I) {
    const FiniteRing& R = *I.ring;
    for (Elem a : I.members) {
        bool ok = false;
        for (Elem b : I.members)
            if (R.mul(R.mul(a, b), a) == a) { ok = true; break; }
        if (!ok) return a;
    }
    return std::nullopt;
}

inline bool is_regular_ideal(const Ideal& I) { return !regular_ideal_failure(I).has_value(); }

struct LiftReport {
    bool all_lift = true;
    // least x with x^2 - x in I but no idempotent e with e - x in I
    std::optional<Elem> failing;
    long checked = 0;
};

// Do idempotents of R/I lift to idempotents of R?
inline LiftReport idempotents_lift(const Ideal& I) {
    const FiniteRing& R = *I.ring;
    LiftReport rep;
    std::vector<Elem> idem;
    for (Elem e = 0; e < R.size; ++e)
        if (R.mul(e, e) == e) idem.push_back(e);
    for (Elem x = 0; x < R.size; ++x) {
        if (!I.contains(R.sub(R.mul(x, x), x))) continue;  // not idempotent mod I
        ++rep.checked;
        bool lifted = false;
        for (Elem e : idem)
            if (I.contains(R.sub(e, x))) { lifted = true; break; }
        if (!lifted) {
            rep.all_lift = false;
            if (!rep.failing) rep.failing = x;
        }
    }
    return rep;
}

inline std::vector<char> unit_mask(const FiniteRing& R) {
    std::vector<char> is_unit(R.size, 0);
    for (Elem x = 0; x < R.size; ++x)
        for (Elem y = 0; y < R.size; ++y)
            if (R.mul(x, y) == R.one && R.mul(y, x) == R.one) { is_unit[x] = 1; break; }
    return is_unit;
}

// J(R) = { x : 1 - r*x is a unit for every r }.  For finite rings this is
// the usual Jacobson radical (two-sided).
inline Ideal jacobson_radical(const RingPtr& ring) {
    const FiniteRing& R = *ring;
    std::vector<char> is_unit = unit_mask(R);
    Ideal I;
    I.ring = ring;
    I.mask.assign(R.size, 0);
    for (Elem x = 0; x < R.size; ++x) {
        bool in_j = true;
        for (Elem r = 0; r < R.size && in_j; ++r)
            if (!is_unit[R.sub(R.one, R.mul(r, x))]) in_j = false;
        if (in_j) {
            I.mask[x] = 1;
            I.members.push_back(x);
        }
    }
    return I;
}

} // namespace ringlab
