#pragma once

// Involutions (star maps): additive, anti-multiplicative, self-inverse.
// Provides validation, the provenance-aware "standard" involutions (identity,
// componentwise, swap, transpose, frobenius, coefficientwise), exhaustive
// enumeration for small rings, induced involutions on derived rings, and
// projections.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "construct.hpp"
#include "ideal.hpp"
#include "map.hpp"
#include "ring.hpp"

namespace ringlab {

struct Involution {
    RingPtr ring;
    std::vector<Elem> tab;
    std::string label;
    Elem operator()(Elem x) const { return tab[x]; }
    bool is_identity() const {
        for (std::size_t i = 0; i < tab.size(); ++i)
            if (tab[i] != (Elem)i) return false;
        return true;
    }
};

// Empty result = valid involution.
inline std::optional<std::string> check_involution(const FiniteRing& R,
                                                   const std::vector<Elem>& tab) {
    if ((int)tab.size() != R.size) return "star table has wrong length";
    for (Elem v : tab)
        if (v >= R.size) return "star image out of range";
    for (Elem x = 0; x < R.size; ++x)
        if (tab[tab[x]] != x) return "star is not self-inverse at " + std::to_string(x);
    for (Elem x = 0; x < R.size; ++x)
        for (Elem y = 0; y < R.size; ++y) {
            if (tab[R.add(x, y)] != R.add(tab[x], tab[y]))
                return "star is not additive at (" + std::to_string(x) + "," + std::to_string(y) + ")";
            if (tab[R.mul(x, y)] != R.mul(tab[y], tab[x]))
                return "star is not anti-multiplicative at (" + std::to_string(x) + "," +
                       std::to_string(y) + ")";
        }
    return std::nullopt;
}

inline Involution validate_involution(const RingPtr& ring, std::vector<Elem> tab,
                                      std::string label) {
    if (auto err = check_involution(*ring, tab))
        throw InputError("invalid involution '" + label + "': " + *err);
    return Involution{ring, std::move(tab), std::move(label)};
}

inline std::optional<Involution> identity_involution(const RingPtr& ring) {
    std::vector<Elem> tab(ring->size);
    for (Elem x = 0; x < ring->size; ++x) tab[x] = x;
    if (check_involution(*ring, tab)) return std::nullopt;  // needs commutativity
    return Involution{ring, std::move(tab), "id"};
}

inline std::optional<Involution> swap_involution(const RingPtr& ring) {
    if (ring->ctor != FiniteRing::Ctor::product || ring->ingredients.size() != 2)
        return std::nullopt;
    if (!ring->ingredients[0]->same_tables(*ring->ingredients[1])) return std::nullopt;
    std::vector<Elem> tab(ring->size);
    for (Elem x = 0; x < ring->size; ++x) {
        Elem a = product_component(*ring, x, 0), b = product_component(*ring, x, 1);
        tab[x] = product_assemble(*ring, {b, a});
    }
    if (check_involution(*ring, tab)) return std::nullopt;
    return Involution{ring, std::move(tab), "swap"};
}

inline std::optional<Involution> transpose_involution(const RingPtr& ring) {
    if (ring->ctor != FiniteRing::Ctor::matrix) return std::nullopt;
    const RingPtr& base = ring->ingredients[0];
    const int k = ring->params[0];
    const int s = base->size;
    std::vector<Elem> tab(ring->size);
    std::vector<Elem> m(k * k), mt(k * k);
    for (long x = 0; x < ring->size; ++x) {
        long id = x;
        for (int p = 0; p < k * k; ++p) { m[p] = (Elem)(id % s); id /= s; }
        for (int r0 = 0; r0 < k; ++r0)
            for (int c0 = 0; c0 < k; ++c0) mt[c0 * k + r0] = m[r0 * k + c0];
        long out = 0;
        for (int p = k * k; p-- > 0;) out = out * s + mt[p];
        tab[x] = (Elem)out;
    }
    if (check_involution(*ring, tab)) return std::nullopt;  // base must be commutative
    return Involution{ring, std::move(tab), "transpose"};
}

inline std::optional<Involution> frobenius_involution(const RingPtr& ring) {
    auto fm = frobenius_map(ring);
    if (!fm) return std::nullopt;
    if (check_involution(*ring, fm->img)) return std::nullopt;
    return Involution{ring, fm->img, "frobenius"};
}

// Standard involutions by provenance: identity when commutative; for a
// product of two identical factors, the coordinate swap; componentwise
// combinations of the factors' standard involutions; transpose on matrix
// rings over commutative bases; x -> x^p when that has order 2; and on
// identity-twist truncated series, coefficientwise lifts of the base's
// standard involutions.  Deduplicated, deterministic order.
inline std::vector<Involution> standard_involutions(const RingPtr& ring) {
    std::vector<Involution> out;
    auto push = [&](std::optional<Involution> inv) {
        if (!inv) return;
        for (const auto& o : out)
            if (o.tab == inv->tab) return;
        out.push_back(std::move(*inv));
    };
    push(identity_involution(ring));
    if (ring->ctor == FiniteRing::Ctor::product) {
        const auto& fs = ring->ingredients;
        std::vector<std::vector<Involution>> per;
        per.reserve(fs.size());
        bool all_ok = true;
        for (const auto& f : fs) {
            per.push_back(standard_involutions(f));
            if (per.back().empty()) all_ok = false;
        }
        if (all_ok) {
            std::vector<std::size_t> pick(fs.size(), 0);
            for (;;) {
                std::vector<Elem> tab(ring->size);
                std::string lbl;
                for (std::size_t i = 0; i < fs.size(); ++i)
                    lbl += (i ? "," : "") + per[i][pick[i]].label;
                for (Elem x = 0; x < ring->size; ++x) {
                    std::vector<Elem> comps(fs.size());
                    for (std::size_t i = 0; i < fs.size(); ++i)
                        comps[i] = per[i][pick[i]].tab[product_component(*ring, x, i)];
                    tab[x] = product_assemble(*ring, comps);
                }
                if (!check_involution(*ring, tab))
                    push(Involution{ring, std::move(tab), "comp(" + lbl + ")"});
                std::size_t i = 0;
                while (i < fs.size() && ++pick[i] == per[i].size()) pick[i++] = 0;
                if (i == fs.size()) break;
            }
        }
        push(swap_involution(ring));
    }
    push(transpose_involution(ring));
    push(frobenius_involution(ring));
    if (ring->ctor == FiniteRing::Ctor::trunc) {
        // identity twist only: twist table must be the identity map
        bool id_twist = true;
        for (std::size_t i = 0; i < ring->twist.size(); ++i)
            if (ring->twist[i] != (Elem)i) { id_twist = false; break; }
        if (id_twist) {
            const RingPtr& base = ring->ingredients[0];
            const int N = ring->params[0];
            for (const auto& binv : standard_involutions(base)) {
                std::vector<Elem> tab(ring->size);
                for (long x = 0; x < ring->size; ++x) {
                    long id = x, o = 0;
                    std::vector<Elem> c(N);
                    for (int i = 0; i < N; ++i) { c[i] = binv.tab[(Elem)(id % base->size)]; id /= base->size; }
                    for (int i = N; i-- > 0;) o = o * base->size + c[i];
                    tab[x] = (Elem)o;
                }
                if (!check_involution(*ring, tab))
                    push(Involution{ring, std::move(tab), "coeff(" + binv.label + ")"});
            }
        }
    }
    return out;
}

// Every involution of the ring, found by backtracking search; sorted by
// table so "enumerated:<k>" is stable.  Refuses rings above the cap.
inline std::vector<Involution> enumerate_involutions(const RingPtr& ring,
                                                     const Caps& caps = default_caps()) {
    if (ring->size > caps.enum_involutions_limit)
        throw CapError("involution enumeration capped at " +
                       std::to_string(caps.enum_involutions_limit) + " elements");
    std::vector<std::vector<Elem>> tabs;
    detail::map_search(*ring, *ring, /*anti=*/true, /*injective=*/true,
                       [&](const std::vector<Elem>& t) {
                           for (std::size_t i = 0; i < t.size(); ++i)
                               if (t[t[i]] != (Elem)i) return;
                           tabs.push_back(t);
                       },
                       /*order2=*/true);
    std::sort(tabs.begin(), tabs.end());
    tabs.erase(std::unique(tabs.begin(), tabs.end()), tabs.end());
    std::vector<Involution> out;
    for (std::size_t i = 0; i < tabs.size(); ++i)
        out.push_back(Involution{ring, tabs[i], "enumerated:" + std::to_string(i)});
    return out;
}

inline std::vector<Elem> projections(const FiniteRing& R, const Involution& inv) {
    std::vector<Elem> out;
    for (Elem p = 0; p < R.size; ++p)
        if (R.mul(p, p) == p && inv.tab[p] == p) out.push_back(p);
    return out;
}

// Is the subset of parent ids closed under the parent star?
inline bool star_invariant(const Involution& inv, const std::vector<Elem>& subset,
                           const std::vector<char>& mask) {
    for (Elem x : subset)
        if (!mask[inv.tab[x]]) return false;
    return true;
}

inline bool star_invariant_ideal(const Involution& inv, const Ideal& I) {
    return star_invariant(inv, I.members, I.mask);
}

// Induced involution on a derived ring (quotient by a star-invariant ideal,
// corner at a projection, center).  Returns nullopt when the parent star
// does not descend.
inline std::optional<Involution> induced_involution(const RingPtr& derived,
                                                    const Involution& parent_inv) {
    const RingPtr parent = derived->ingredients.empty() ? nullptr : derived->ingredients[0];
    if (!parent || parent_inv.ring.get() != parent.get()) return std::nullopt;
    if (derived->ctor == FiniteRing::Ctor::quotient) {
        // rebuild the kernel from the stored generators, then
        // class(x)* := class(x*), well-defined iff the kernel is star-invariant
        std::vector<Elem> gens(derived->params.begin(), derived->params.end());
        Ideal I = ideal_closure(parent, gens);
        if (!star_invariant_ideal(parent_inv, I)) return std::nullopt;
        const auto& reps = derived->parent_elem;
        auto cls = [&](Elem x) {
            Elem best = x;
            for (Elem i : I.members) best = std::min(best, parent->add(x, i));
            return (Elem)(std::lower_bound(reps.begin(), reps.end(), best) - reps.begin());
        };
        std::vector<Elem> tab(derived->size);
        for (Elem i = 0; i < derived->size; ++i) tab[i] = cls(parent_inv.tab[reps[i]]);
        if (check_involution(*derived, tab)) return std::nullopt;
        return Involution{derived, std::move(tab), "induced(" + parent_inv.label + ")"};
    }
    if (derived->ctor == FiniteRing::Ctor::corner) {
        Elem e = (Elem)derived->params[0];
        if (parent_inv.tab[e] != e) return std::nullopt;
        const auto& sub = derived->parent_elem;
        std::vector<Elem> tab(derived->size);
        for (Elem i = 0; i < derived->size; ++i) {
            Elem im = parent_inv.tab[sub[i]];
            auto it = std::lower_bound(sub.begin(), sub.end(), im);
            if (it == sub.end() || *it != im) return std::nullopt;
            tab[i] = (Elem)(it - sub.begin());
        }
        if (check_involution(*derived, tab)) return std::nullopt;
        return Involution{derived, std::move(tab), "induced(" + parent_inv.label + ")"};
    }
    if (derived->ctor == FiniteRing::Ctor::center_sub ||
        derived->ctor == FiniteRing::Ctor::grading_part) {
        const auto& sub = derived->parent_elem;
        std::vector<Elem> tab(derived->size);
        for (Elem i = 0; i < derived->size; ++i) {
            Elem im = parent_inv.tab[sub[i]];
            auto it = std::lower_bound(sub.begin(), sub.end(), im);
            if (it == sub.end() || *it != im) return std::nullopt;
            tab[i] = (Elem)(it - sub.begin());
        }
        if (check_involution(*derived, tab)) return std::nullopt;
        return Involution{derived, std::move(tab), "induced(" + parent_inv.label + ")"};
    }
    return std::nullopt;
}

// Quotient + induced star in one step; returns nullopt unless I is
// star-invariant (in which case class(x)* = class(x*) is well-defined).
struct StarredQuotient {
    RingPtr ring;
    Involution star;
    RingMap proj;
};

inline std::optional<StarredQuotient> star_quotient(const Involution& inv, const Ideal& I,
                                                    const Caps& caps = default_caps()) {
    if (!star_invariant_ideal(inv, I)) return std::nullopt;
    RingPtr q = quotient_ring(I, caps);
    RingMap pr = quotient_map(I, q);
    std::vector<Elem> tab(q->size);
    for (Elem i = 0; i < q->size; ++i) tab[i] = pr.img[inv.tab[q->parent_elem[i]]];
    if (check_involution(*q, tab)) return std::nullopt;
    return StarredQuotient{q, Involution{q, std::move(tab), "induced(" + inv.label + ")"}, std::move(pr)};
}

} // namespace ringlab
