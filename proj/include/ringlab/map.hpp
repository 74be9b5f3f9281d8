#pragma once

// Ring maps between table rings, plus enumeration of unital endomorphisms.
//
// The enumeration walks an additive generating chain: starting from the
// prime subring <1> (whose images are forced), it repeatedly picks the
// lowest-id element outside the current subgroup as the next generator and
// branches over candidate images.  Additivity holds by construction; partial
// multiplicativity is checked on every newly defined pair whose product is
// already inside the defined subgroup, which prunes most branches early.
// The same walker, with an anti-multiplicative twist, drives involution
// enumeration in star.hpp.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "ring.hpp"

namespace ringlab {

struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<Elem> img;
    std::string label;
    Elem operator()(Elem a) const { return img[a]; }
};

// Empty result means the table is a unital ring homomorphism.
inline std::optional<std::string> check_ring_hom(const FiniteRing& src,
                                                 const FiniteRing& tgt,
                                                 const std::vector<Elem>& img) {
    if ((int)img.size() != src.size) return "image table has wrong length";
    for (Elem v : img)
        if (v >= tgt.size) return "image id out of range";
    if (img[src.one] != tgt.one) return "1 is not sent to 1";
    for (Elem a = 0; a < src.size; ++a)
        for (Elem b = 0; b < src.size; ++b) {
            if (img[src.add(a, b)] != tgt.add(img[a], img[b]))
                return "not additive at (" + std::to_string(a) + "," + std::to_string(b) + ")";
            if (img[src.mul(a, b)] != tgt.mul(img[a], img[b]))
                return "not multiplicative at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
    return std::nullopt;
}

inline bool is_surjective(const FiniteRing& tgt, const std::vector<Elem>& img) {
    std::vector<char> hit(tgt.size, 0);
    for (Elem v : img) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

namespace detail {

// One step of the additive generating chain.
struct GenStep {
    Elem gen;
    int rel_order;                 // least m >= 1 with m*gen in the previous subgroup
    Elem anchor;                   // rel_order * gen (element of the previous subgroup)
    std::vector<Elem> new_elems;   // elements added by this step, in id order
    // new_elems[t] = base[t] + mult[t]*gen with base[t] in the previous subgroup
    std::vector<Elem> base;
    std::vector<int> mult;
};

struct GenChain {
    std::vector<Elem> seed;        // the prime subring <1>, in id order
    std::vector<GenStep> steps;
};

inline GenChain build_gen_chain(const FiniteRing& R) {
    GenChain ch;
    std::vector<char> in(R.size, 0);
    Elem c = R.zero;
    do {
        ch.seed.push_back(c);
        in[c] = 1;
        c = R.add(c, R.one);
    } while (c != R.zero);
    std::sort(ch.seed.begin(), ch.seed.end());

    std::vector<Elem> members = ch.seed;
    for (;;) {
        Elem g = 0;
        bool found = false;
        for (Elem a = 0; a < R.size; ++a)
            if (!in[a]) { g = a; found = true; break; }
        if (!found) break;

        GenStep st;
        st.gen = g;
        Elem acc = g;
        int m = 1;
        while (!in[acc]) { acc = R.add(acc, g); ++m; }
        st.rel_order = m;
        st.anchor = acc;
        for (int j = 1; j < m; ++j) {
            Elem jg = R.zero;
            for (int t = 0; t < j; ++t) jg = R.add(jg, g);
            for (Elem b : members) {
                Elem e = R.add(b, jg);
                st.new_elems.push_back(e);
                st.base.push_back(b);
                st.mult.push_back(j);
                in[e] = 1;
            }
        }
        for (Elem e : st.new_elems) members.push_back(e);
        std::sort(members.begin(), members.end());
        ch.steps.push_back(std::move(st));
    }
    return ch;
}

// Backtracking over images of the chain generators.  `anti` selects the
// anti-multiplicative law (images compose in reverse), `injective` restricts
// to bijections, `order2` prunes maps that cannot square to the identity
// (src and tgt must then be the same ring).  `accept` is called on every
// completed image table that passes the full multiplicativity scan.
inline void map_search(const FiniteRing& src, const FiniteRing& tgt, bool anti,
                       bool injective,
                       const std::function<void(const std::vector<Elem>&)>& accept,
                       bool order2 = false) {
    GenChain ch = build_gen_chain(src);
    std::vector<int> img(src.size, -1);
    std::vector<char> used(tgt.size, 0);
    std::vector<Elem> dom;  // defined domain so far, in definition order

    // seed: 1 -> 1 forces the prime subring
    {
        Elem s = src.zero, t = tgt.zero;
        do {
            if (img[s] != -1) return;  // char(tgt) < char(src): no unital map
            img[s] = t;
            if (injective) {
                if (used[t]) return;
                used[t] = 1;
            }
            dom.push_back(s);
            s = src.add(s, src.one);
            t = tgt.add(t, tgt.one);
        } while (s != src.zero);
        if (t != tgt.zero) return;  // char(tgt) not a multiple: inconsistent
    }

    auto mul_ok = [&](Elem a, Elem b) {
        Elem p = src.mul(a, b);
        if (img[p] == -1) return true;
        Elem lhs = anti ? tgt.mul((Elem)img[b], (Elem)img[a])
                        : tgt.mul((Elem)img[a], (Elem)img[b]);
        return lhs == (Elem)img[p];
    };

    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (depth == ch.steps.size()) {
            for (Elem a = 0; a < src.size; ++a)
                for (Elem b = 0; b < src.size; ++b)
                    if (!mul_ok(a, b)) return;
            std::vector<Elem> out(src.size);
            for (int i = 0; i < src.size; ++i) out[i] = (Elem)img[i];
            accept(out);
            return;
        }
        const GenStep& st = ch.steps[depth];
        for (Elem h = 0; h < tgt.size; ++h) {
            // well-definedness: rel_order*h must hit the image of the anchor
            Elem mh = tgt.zero;
            for (int j = 0; j < st.rel_order; ++j) mh = tgt.add(mh, h);
            if ((int)mh != img[st.anchor]) continue;

            std::size_t mark = dom.size();
            bool ok = true;
            for (std::size_t t = 0; t < st.new_elems.size() && ok; ++t) {
                Elem e = st.new_elems[t];
                Elem jh = tgt.zero;
                for (int j = 0; j < st.mult[t]; ++j) jh = tgt.add(jh, h);
                Elem v = tgt.add((Elem)img[st.base[t]], jh);
                img[e] = v;
                if (injective) {
                    if (used[v]) { ok = false; img[e] = -1; break; }
                    used[v] = 1;
                }
                dom.push_back(e);
            }
            if (ok) {
                for (std::size_t t = mark; t < dom.size() && ok; ++t) {
                    Elem e = dom[t];
                    if (order2 && img[img[e]] != -1 && img[img[e]] != (int)e) { ok = false; break; }
                    for (Elem d : dom) {
                        if (!mul_ok(e, d) || !mul_ok(d, e)) { ok = false; break; }
                    }
                }
            }
            if (ok) rec(depth + 1);
            while (dom.size() > mark) {
                Elem e = dom.back();
                dom.pop_back();
                if (injective) used[img[e]] = 0;
                img[e] = -1;
            }
        }
    };
    rec(0);
}

} // namespace detail

// All unital ring endomorphisms of `ring`, sorted by image table.  Refuses
// rings above caps.endo_limit (the search is exponential in the worst case).
inline std::vector<RingMap> endomorphisms(const RingPtr& ring,
                                          const Caps& caps = default_caps()) {
    if (ring->size > caps.endo_limit)
        throw CapError("endomorphism enumeration capped at " +
                       std::to_string(caps.endo_limit) + " elements");
    std::vector<std::vector<Elem>> tabs;
    detail::map_search(*ring, *ring, /*anti=*/false, /*injective=*/false,
                       [&](const std::vector<Elem>& t) { tabs.push_back(t); });
    std::sort(tabs.begin(), tabs.end());
    tabs.erase(std::unique(tabs.begin(), tabs.end()), tabs.end());
    std::vector<RingMap> out;
    for (std::size_t i = 0; i < tabs.size(); ++i)
        out.push_back(RingMap{ring, ring, tabs[i], "endo:" + std::to_string(i)});
    return out;
}

// x -> x^p where p is the characteristic, when that map is a ring
// endomorphism (it is over any commutative ring of prime characteristic).
inline std::optional<RingMap> frobenius_map(const RingPtr& ring) {
    int p = 1;
    Elem c = ring->one;
    while (c != ring->zero) { c = ring->add(c, ring->one); ++p; }
    // p = characteristic; frobenius needs it prime
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return std::nullopt;
    if (p < 2) return std::nullopt;
    std::vector<Elem> img(ring->size);
    for (Elem a = 0; a < ring->size; ++a) img[a] = ring->pow(a, p);
    if (check_ring_hom(*ring, *ring, img)) return std::nullopt;
    return RingMap{ring, ring, std::move(img), "frobenius"};
}

} // namespace ringlab
