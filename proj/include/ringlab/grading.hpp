#pragma once

// Gradings: a family of additive subgroups G_0..G_{k-1} with R = ⊕ G_i and
// G_i·G_j ⊆ G_{i+j}.  Indices are taken in Z when modulus == 0 (products
// falling past the last part must vanish) or cyclically mod k.

#include <algorithm>
#include <string>
#include <vector>

#include "common.hpp"
#include "construct.hpp"
#include "ring.hpp"

namespace ringlab {

struct Grading {
    RingPtr ring;
    std::vector<std::vector<Elem>> parts;  // sorted id lists
    int modulus = 0;                       // 0 = integer-graded window
    std::string label;
};

// All problems found with a proposed grading; empty = valid.
inline std::vector<std::string> grading_validate(const Grading& g) {
    std::vector<std::string> errs;
    const FiniteRing& R = *g.ring;
    const int k = (int)g.parts.size();
    if (k == 0) return {"grading has no parts"};

    std::vector<std::vector<char>> mask(k, std::vector<char>(R.size, 0));
    for (int i = 0; i < k; ++i) {
        for (Elem x : g.parts[i]) {
            if (x >= R.size) return {"part element id out of range"};
            mask[i][x] = 1;
        }
        if (!mask[i][R.zero]) errs.push_back("part " + std::to_string(i) + " misses 0");
        for (Elem a : g.parts[i])
            for (Elem b : g.parts[i])
                if (!mask[i][R.add(a, b)]) {
                    errs.push_back("part " + std::to_string(i) + " is not an additive subgroup (" +
                                   R.name(a) + "+" + R.name(b) + " escapes)");
                    goto next_part;
                }
    next_part:;
    }
    if (!errs.empty()) return errs;

    {
        // direct sum: the summation map over all tuples must be a bijection
        long tuples = 1;
        for (int i = 0; i < k; ++i) tuples *= (long)g.parts[i].size();
        if (tuples != R.size) {
            errs.push_back("part sizes multiply to " + std::to_string(tuples) + ", ring has " +
                           std::to_string(R.size) + " elements (not a direct sum)");
            return errs;
        }
        std::vector<char> hit(R.size, 0);
        std::vector<std::size_t> pick(k, 0);
        for (;;) {
            Elem s = R.zero;
            for (int i = 0; i < k; ++i) s = R.add(s, g.parts[i][pick[i]]);
            if (hit[s]) {
                errs.push_back("sum map is not injective (element " + R.name(s) + " repeats)");
                return errs;
            }
            hit[s] = 1;
            int i = 0;
            while (i < k && ++pick[i] == g.parts[i].size()) pick[i++] = 0;
            if (i == k) break;
        }
    }

    if (!mask[0][R.one]) errs.push_back("1 does not lie in part 0");

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int t = g.modulus > 0 ? (i + j) % g.modulus : i + j;
            for (Elem a : g.parts[i])
                for (Elem b : g.parts[j]) {
                    Elem p = R.mul(a, b);
                    bool ok = (t < k) ? (bool)mask[t][p] : p == R.zero;
                    if (!ok) {
                        errs.push_back("G_" + std::to_string(i) + "*G_" + std::to_string(j) +
                                       " escapes (" + R.name(a) + "*" + R.name(b) + ")");
                        goto next_pair;
                    }
                }
        next_pair:;
        }
    return errs;
}

// The degree-0 part as a ring in its own right (a subring containing 1).
inline RingPtr grading_part_zero(const Grading& g, const Caps& caps = default_caps()) {
    std::string prov = "part0(" + g.ring->provenance + ")";
    return detail::subring_on_subset(g.ring, g.parts[0], g.ring->one,
                                     FiniteRing::Ctor::grading_part, prov, caps);
}

// Natural gradings on constructor families: truncated series graded by
// degree; triangular rings by diagonal/strictly-upper split.
inline std::vector<Grading> natural_gradings(const RingPtr& ring) {
    std::vector<Grading> out;
    if (ring->ctor == FiniteRing::Ctor::trunc) {
        const RingPtr& base = ring->ingredients[0];
        const int N = ring->params[0];
        Grading g;
        g.ring = ring;
        g.modulus = 0;
        g.label = "by degree";
        g.parts.resize(N);
        for (long x = 0; x < ring->size; ++x) {
            // homogeneous components: a*X^i
            int nonzero = -1, count = 0;
            for (int i = 0; i < N; ++i)
                if (trunc_coeff(*ring, (Elem)x, i) != base->zero) { nonzero = i; ++count; }
            if (count == 0)
                for (int i = 0; i < N; ++i) g.parts[i].push_back((Elem)x);
            else if (count == 1)
                g.parts[nonzero].push_back((Elem)x);
        }
        for (auto& p : g.parts) std::sort(p.begin(), p.end());
        out.push_back(std::move(g));
    }
    if (ring->ctor == FiniteRing::Ctor::triangular) {
        const long s = ring->ingredients[0]->size;
        Grading g;
        g.ring = ring;
        g.modulus = 0;
        g.label = "diagonal/strict-upper";
        g.parts.resize(2);
        for (long x = 0; x < ring->size; ++x) {
            Elem b = (Elem)((x / s) % s);
            Elem diag = (Elem)(x - (long)b * s);
            if (b == ring->ingredients[0]->zero) g.parts[0].push_back((Elem)x);
            if (diag == 0) g.parts[1].push_back((Elem)x);
        }
        for (auto& p : g.parts) std::sort(p.begin(), p.end());
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace ringlab
