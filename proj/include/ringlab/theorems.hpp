#pragma once

// The check catalog: 33 concrete-instance verifications (C01..C33) of
// structural facts about clean-style decompositions.  Each check gathers its
// own instances from a corpus, evaluates preconditions machine-checkably
// (returning not_applicable with the failing precondition named), and for
// constructive statements re-verifies the explicit lift formulas rather than
// mere existence.  Witness audits in C02/C15/C27 recompute decompositions
// from raw tables so a corrupted classifier cannot slip through.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "common.hpp"
#include "construct.hpp"
#include "corpus.hpp"
#include "grading.hpp"
#include "ideal.hpp"
#include "map.hpp"
#include "ring.hpp"
#include "star.hpp"

namespace ringlab {

enum class CheckStatus { verified, counterexample, not_applicable };

inline const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::verified: return "verified";
        case CheckStatus::counterexample: return "counterexample";
        default: return "not-applicable";
    }
}

struct CheckReport {
    std::string id;
    std::string statement;
    std::string inputs;
    CheckStatus status = CheckStatus::verified;
    std::string witness;
    long long nanos = 0;
    long scanned = 0;
};

struct Instance {
    std::string desc;
    RingPtr ring;
    std::optional<Involution> star;
    std::optional<CentralPolynomial> poly;
    std::optional<Ideal> ideal;
    std::optional<Grading> grading;
    std::vector<Involution> factor_stars;  // componentwise pieces, when relevant
    int n_param = 0;
};

struct CheckDef {
    std::string id;
    std::string statement;
    std::function<std::vector<Instance>(const std::vector<CorpusEntry>&, const Caps&)> gather;
    std::function<void(const Instance&, const Caps&, CheckReport&)> eval;
};

namespace detail {

inline std::string elem_ref(const FiniteRing& R, Elem x) {
    return R.name(x) + " (#" + std::to_string(x) + ")";
}

// raw-table computations, deliberately independent of classify.hpp internals
inline bool raw_regular(const FiniteRing& R, Elem r) {
    for (Elem y = 0; y < R.size; ++y)
        if (R.mul(R.mul(r, y), r) == r) return true;
    return false;
}

inline std::optional<Elem> raw_inverse(const FiniteRing& R, Elem u) {
    for (Elem w = 0; w < R.size; ++w)
        if (R.mul(u, w) == R.one && R.mul(w, u) == R.one) return w;
    return std::nullopt;
}

inline std::optional<std::pair<Elem, Elem>> zero_divisor_pair(const FiniteRing& R) {
    for (Elem a = 1; a < R.size; ++a)
        for (Elem b = 1; b < R.size; ++b)
            if (R.mul(a, b) == R.zero) return std::make_pair(a, b);
    return std::nullopt;
}

inline std::optional<Elem> nontrivial_idempotent(const FiniteRing& R) {
    for (Elem e = 0; e < R.size; ++e)
        if (R.mul(e, e) == e && e != R.zero && e != R.one) return e;
    return std::nullopt;
}

inline std::optional<Elem> noncentral_idempotent(const FiniteRing& R) {
    for (Elem e = 0; e < R.size; ++e) {
        if (R.mul(e, e) != e) continue;
        for (Elem x = 0; x < R.size; ++x)
            if (R.mul(e, x) != R.mul(x, e)) return e;
    }
    return std::nullopt;
}

// nonzero proper ideals: principal closures deduped, plus the Jacobson radical
inline std::vector<Ideal> ideal_family(const RingPtr& ring, bool include_zero_jac) {
    std::vector<Ideal> out;
    auto have = [&](const Ideal& I) {
        for (const auto& J : out)
            if (J.members == I.members) return true;
        return false;
    };
    for (Elem g = 1; g < ring->size; ++g) {
        Ideal I = ideal_closure(ring, {g});
        if (I.is_whole_ring()) continue;
        if (!have(I)) out.push_back(std::move(I));
    }
    Ideal J = jacobson_radical(ring);
    if ((J.size() > 1 || include_zero_jac) && !J.is_whole_ring() && !have(J))
        out.push_back(std::move(J));
    return out;
}

inline std::string desc_star(const RingPtr& r, const Involution& inv) {
    return "star(" + r->provenance + ", " + inv.label + ")";
}

// corner subring data computed in parent coordinates
struct CornerView {
    Elem e = 0;
    std::vector<Elem> members;               // sorted ids of e*x*e
    std::vector<std::pair<Elem, Elem>> units;  // (u, inverse) with uw = wu = e
    std::vector<Elem> idems;                 // f in eRe with f*f = f
};

inline CornerView corner_view(const FiniteRing& R, Elem e) {
    CornerView v;
    v.e = e;
    std::vector<char> in(R.size, 0);
    for (Elem x = 0; x < R.size; ++x) in[R.mul(R.mul(e, x), e)] = 1;
    for (Elem x = 0; x < R.size; ++x)
        if (in[x]) v.members.push_back(x);
    for (Elem u : v.members) {
        for (Elem w : v.members)
            if (R.mul(u, w) == e && R.mul(w, u) == e) {
                v.units.emplace_back(u, w);
                break;
            }
    }
    for (Elem f : v.members)
        if (R.mul(f, f) == f) v.idems.push_back(f);
    return v;
}

// componentwise involutions on a direct product, assembled from the factors'
// standard involutions
struct CompStar {
    Involution prod;
    std::vector<Involution> comps;
};

inline std::vector<CompStar> componentwise_stars(const RingPtr& prod) {
    std::vector<CompStar> out;
    if (prod->ctor != FiniteRing::Ctor::product) return out;
    const auto& factors = prod->ingredients;
    std::vector<std::vector<Involution>> choices;
    for (const auto& f : factors) choices.push_back(standard_involutions(f));
    for (const auto& c : choices)
        if (c.empty()) return out;
    std::vector<std::size_t> pick(factors.size(), 0);
    for (;;) {
        std::vector<Elem> tab(prod->size);
        for (Elem x = 0; x < prod->size; ++x) {
            std::vector<Elem> xs(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i)
                xs[i] = choices[i][pick[i]].tab[product_component(*prod, x, (int)i)];
            tab[x] = product_assemble(*prod, xs);
        }
        if (!check_involution(*prod, tab)) {
            CompStar cs;
            std::string label = "comp(";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                label += (i ? ", " : "") + choices[i][pick[i]].label;
                cs.comps.push_back(choices[i][pick[i]]);
            }
            label += ")";
            cs.prod = Involution{prod, std::move(tab), label};
            out.push_back(std::move(cs));
        }
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return out;
}

inline Census census_of(const RingPtr& r, const Involution* inv = nullptr,
                        const CentralPolynomial* g = nullptr) {
    return ring_census(r, inv, g);
}

// gather helpers ------------------------------------------------------------

inline std::vector<Instance> every_entry(const std::vector<CorpusEntry>& corpus, int max_size) {
    std::vector<Instance> out;
    for (const auto& e : corpus)
        if (e.ring->size <= max_size)
            out.push_back(Instance{e.ring->provenance, e.ring, {}, {}, {}, {}, {}, 0});
    return out;
}

inline std::vector<Instance> every_starred(const std::vector<CorpusEntry>& corpus, int max_size) {
    std::vector<Instance> out;
    for (const auto& e : corpus) {
        if (e.ring->size > max_size) continue;
        for (const auto& inv : e.involutions)
            out.push_back(
                Instance{desc_star(e.ring, inv), e.ring, inv, {}, {}, {}, {}, 0});
    }
    return out;
}

inline std::vector<Instance> product_entries(const std::vector<CorpusEntry>& corpus) {
    std::vector<Instance> out;
    for (const auto& e : corpus)
        if (e.ring->ctor == FiniteRing::Ctor::product)
            out.push_back(Instance{e.ring->provenance, e.ring, {}, {}, {}, {}, {}, 0});
    return out;
}

inline std::vector<Instance> trunc_entries(const std::vector<CorpusEntry>& corpus) {
    std::vector<Instance> out;
    for (const auto& e : corpus)
        if (e.ring->ctor == FiniteRing::Ctor::trunc)
            out.push_back(Instance{e.ring->provenance, e.ring, {}, {}, {}, {}, {},
                                   e.ring->params.empty() ? 0 : e.ring->params[0]});
    return out;
}

// surjection instances: principal/Jacobson quotients (bounded) + product
// coordinate projections; used by C01 and, crossed with polynomials, C14
inline std::vector<Instance> surjection_instances(const std::vector<CorpusEntry>& corpus,
                                                  int quot_max) {
    std::vector<Instance> out;
    for (const auto& e : corpus) {
        if (e.ring->size <= quot_max) {
            for (auto& I : ideal_family(e.ring, false)) {
                Instance in;
                in.ring = e.ring;
                in.desc = e.ring->provenance + " mod " + I.describe();
                in.ideal = std::move(I);
                in.n_param = -1;
                out.push_back(std::move(in));
            }
        }
        if (e.ring->ctor == FiniteRing::Ctor::product) {
            for (std::size_t i = 0; i < e.ring->ingredients.size(); ++i) {
                Instance in;
                in.ring = e.ring;
                in.desc = e.ring->provenance + " proj " + std::to_string(i);
                in.n_param = (int)i;
                out.push_back(std::move(in));
            }
        }
    }
    return out;
}

inline void set_cex(CheckReport& rep, std::string w) {
    rep.status = CheckStatus::counterexample;
    rep.witness = std::move(w);
}

inline void set_na(CheckReport& rep, std::string w) {
    rep.status = CheckStatus::not_applicable;
    rep.witness = std::move(w);
}

} // namespace detail

// ---------------------------------------------------------------------------
// catalog

inline const std::vector<CheckDef>& check_catalog() {
    using namespace detail;
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> v;

        v.push_back(CheckDef{
            "C01",
            "Every surjective ring image of a weakly r-clean ring is weakly r-clean.",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                return surjection_instances(c, 64);
            },
            [](const Instance& in, const Caps& caps, CheckReport& rep) {
                Census src = census_of(in.ring);
                if (!src.is_weakly_r_clean.value) {
                    set_na(rep, "hypothesis failed: source not weakly r-clean, witness " +
                                    elem_ref(*in.ring, src.is_weakly_r_clean.witness));
                    return;
                }
                RingPtr tgt = in.ideal ? quotient_ring(*in.ideal, caps)
                                       : in.ring->ingredients.at(in.n_param);
                Census t = census_of(tgt);
                rep.scanned = tgt->size;
                if (!t.is_weakly_r_clean.value)
                    set_cex(rep, "image " + tgt->provenance + " not weakly r-clean at " +
                                     elem_ref(*tgt, t.is_weakly_r_clean.witness));
            }});

        v.push_back(CheckDef{
            "C02",
            "A finite direct product is weakly r-clean exactly when every factor is weakly "
            "r-clean and at most one factor is not r-clean; decomposition types propagate "
            "componentwise, and every stored witness passes a raw-table regularity audit.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return product_entries(c); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis Ap = analyze(in.ring);
                std::vector<Analysis> Af;
                for (const auto& f : in.ring->ingredients) Af.push_back(analyze(f));
                bool lhs = Ap.census.is_weakly_r_clean.value;
                bool all_wrc = true;
                int not_rclean = 0;
                for (const auto& a : Af) {
                    if (!a.census.is_weakly_r_clean.value) all_wrc = false;
                    if (!a.census.is_r_clean.value) ++not_rclean;
                }
                bool rhs = all_wrc && not_rclean <= 1;
                if (lhs != rhs) {
                    set_cex(rep, std::string("biconditional failed: product ") +
                                     (lhs ? "is" : "is not") + " weakly r-clean but factors say " +
                                     (rhs ? "yes" : "no"));
                    return;
                }
                for (Elem x = 0; x < R.size; ++x) {
                    ++rep.scanned;
                    bool t1 = Ap.prof[x].weakly_r_clean_t1();
                    bool t2 = Ap.prof[x].weakly_r_clean_t2();
                    bool t1c = true, t2c = true;
                    for (std::size_t i = 0; i < Af.size(); ++i) {
                        Elem xi = product_component(R, x, (int)i);
                        if (!Af[i].prof[xi].weakly_r_clean_t1()) t1c = false;
                        if (!Af[i].prof[xi].weakly_r_clean_t2()) t2c = false;
                    }
                    if (t1 != t1c || t2 != t2c) {
                        set_cex(rep, "componentwise bookkeeping failed at x=" + elem_ref(R, x));
                        return;
                    }
                    const std::optional<Decomp>& w =
                        Ap.prof[x].r_clean_w ? Ap.prof[x].r_clean_w
                                             : Ap.prof[x].weakly_r_clean_t2_w;
                    if (!w) {
                        set_cex(rep, "element not weakly r-clean: x=" + elem_ref(R, x));
                        return;
                    }
                    bool plus = Ap.prof[x].r_clean_w.has_value();
                    Elem r = w->part1, e = w->part2;
                    if (R.mul(e, e) != e || (plus ? R.add(r, e) : R.sub(r, e)) != x ||
                        !raw_regular(R, r)) {
                        set_cex(rep, "raw witness audit failed at x=" + elem_ref(R, x) +
                                         "; r=" + elem_ref(R, r) + "; e=" + elem_ref(R, e));
                        return;
                    }
                }
                if (not_rclean == 0)
                    rep.witness = "note: every factor is r-clean; the at-most-one-exception "
                                  "clause is not separately exercised (finite rings are clean)";
            }});

        v.push_back(CheckDef{
            "C03",
            "In a ring without zero divisors every nonzero regular element is a unit, and weak "
            "cleanness coincides with weak r-cleanness ring-wide and element-wise.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_entry(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring);
                if (!A.census.no_zero_divisors) {
                    auto zd = zero_divisor_pair(R);
                    set_na(rep, "precondition failed: zero divisors exist, witness a=" +
                                    elem_ref(R, zd->first) + ", b=" + elem_ref(R, zd->second));
                    return;
                }
                for (Elem r : A.sets.regs) {
                    if (r == R.zero) continue;
                    ++rep.scanned;
                    if (!A.sets.unit[r]) {
                        set_cex(rep, "nonzero regular element is not a unit: " + elem_ref(R, r));
                        return;
                    }
                }
                for (Elem x = 0; x < R.size; ++x) {
                    ++rep.scanned;
                    if (A.prof[x].weakly_clean() != A.prof[x].weakly_r_clean()) {
                        set_cex(rep, "element-level mismatch at " + elem_ref(R, x));
                        return;
                    }
                }
                if (A.census.is_weakly_clean.value != A.census.is_weakly_r_clean.value)
                    set_cex(rep, "ring-level mismatch");
            }});

        v.push_back(CheckDef{
            "C04",
            "A difference u - f of a corner-ring unit and a corner-ring idempotent (inside eRe) "
            "is a unit-minus-idempotent in the whole ring via v = u + (1-e) with inverse "
            "w + (1-e) and idempotent part f + (1-e).",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_entry(c, 128); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                for (Elem e = 0; e < R.size; ++e) {
                    if (R.mul(e, e) != e || e == R.zero) continue;
                    CornerView cv = corner_view(R, e);
                    Elem ce = R.sub(R.one, e);
                    for (const auto& [u, w] : cv.units)
                        for (Elem f : cv.idems) {
                            ++rep.scanned;
                            Elem a = R.sub(u, f);
                            Elem vl = R.add(u, ce), wl = R.add(w, ce);
                            Elem ebar = R.add(f, ce);
                            if (R.mul(vl, wl) != R.one || R.mul(wl, vl) != R.one) {
                                set_cex(rep, "lift v=u+(1-e) not a unit: e=" + elem_ref(R, e) +
                                                 ", u=" + elem_ref(R, u));
                                return;
                            }
                            if (R.mul(ebar, ebar) != ebar) {
                                set_cex(rep, "lift f+(1-e) not idempotent: e=" + elem_ref(R, e) +
                                                 ", f=" + elem_ref(R, f));
                                return;
                            }
                            if (R.sub(vl, ebar) != a) {
                                set_cex(rep, "decomposition mismatch: a=" + elem_ref(R, a));
                                return;
                            }
                        }
                }
            }});

        v.push_back(CheckDef{
            "C05",
            "In an abelian ring, the product ae of a weakly clean element a and an idempotent "
            "e is weakly clean.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_entry(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                for (Elem a = 0; a < R.size; ++a) {
                    if (!A.prof[a].weakly_clean()) continue;
                    for (Elem e : A.sets.idems) {
                        ++rep.scanned;
                        if (!A.prof[R.mul(a, e)].weakly_clean()) {
                            set_cex(rep, "ae not weakly clean: a=" + elem_ref(R, a) +
                                             ", e=" + elem_ref(R, e));
                            return;
                        }
                    }
                }
            }});

        v.push_back(CheckDef{
            "C06",
            "In an abelian ring, when a and -a are both clean, a + e is clean and a - e is "
            "weakly clean for every idempotent e.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_entry(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                for (Elem a = 0; a < R.size; ++a) {
                    if (!A.prof[a].clean() || !A.prof[R.neg(a)].clean()) continue;
                    for (Elem e : A.sets.idems) {
                        ++rep.scanned;
                        if (!A.prof[R.add(a, e)].clean()) {
                            set_cex(rep, "a+e not clean: a=" + elem_ref(R, a) +
                                             ", e=" + elem_ref(R, e));
                            return;
                        }
                        if (!A.prof[R.sub(a, e)].weakly_clean()) {
                            set_cex(rep, "a-e not weakly clean: a=" + elem_ref(R, a) +
                                             ", e=" + elem_ref(R, e));
                            return;
                        }
                    }
                }
            }});

        v.push_back(CheckDef{
            "C07",
            "An abelian ring is weakly clean exactly when it is weakly r-clean, element by "
            "element.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_entry(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                for (Elem x = 0; x < R.size; ++x) {
                    ++rep.scanned;
                    if (A.prof[x].weakly_clean() != A.prof[x].weakly_r_clean()) {
                        set_cex(rep, "element-level mismatch at " + elem_ref(R, x));
                        return;
                    }
                }
                if (A.census.is_weakly_clean.value != A.census.is_weakly_r_clean.value)
                    set_cex(rep, "ring-level mismatch");
            }});

        v.push_back(CheckDef{
            "C08",
            "An abelian ring is weakly exchange exactly when it is weakly clean, element by "
            "element (right-sided exchange condition).",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_entry(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                for (Elem x = 0; x < R.size; ++x) {
                    ++rep.scanned;
                    if (A.prof[x].weakly_exchange() != A.prof[x].weakly_clean()) {
                        set_cex(rep, "element-level mismatch at " + elem_ref(R, x));
                        return;
                    }
                }
                if (A.census.is_weakly_exchange.value != A.census.is_weakly_clean.value)
                    set_cex(rep, "ring-level mismatch");
            }});

        v.push_back(CheckDef{
            "C09",
            "A truncated (skew) power-series ring is weakly r-clean exactly when its "
            "coefficient ring is; the quotient direction is exact, the converse holds at the "
            "recorded truncation level.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return trunc_entries(c); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                RingPtr base = in.ring->ingredients.at(0);
                Census top = census_of(in.ring);
                Census bot = census_of(base);
                rep.scanned = in.ring->size + base->size;
                if (top.is_weakly_r_clean.value != bot.is_weakly_r_clean.value) {
                    set_cex(rep, "truncated ring and base disagree");
                    return;
                }
                rep.witness = "note: truncation level " + std::to_string(in.n_param) +
                              "; converse direction checked at this level only";
            }});

        v.push_back(CheckDef{
            "C10",
            "For a regular ideal I modulo which idempotents lift, R is weakly r-clean exactly "
            "when R/I is weakly r-clean.",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c) {
                    if (e.ring->size > 36) continue;
                    for (auto& I : ideal_family(e.ring, false)) {
                        Instance in;
                        in.ring = e.ring;
                        in.desc = e.ring->provenance + " mod " + I.describe();
                        in.ideal = std::move(I);
                        out.push_back(std::move(in));
                    }
                }
                return out;
            },
            [](const Instance& in, const Caps& caps, CheckReport& rep) {
                if (!in.ideal) throw InputError("C10 requires an ideal");
                const FiniteRing& R = *in.ring;
                if (auto bad = regular_ideal_failure(*in.ideal)) {
                    set_na(rep, "precondition failed: is_regular_ideal, witness " +
                                    elem_ref(R, *bad));
                    return;
                }
                LiftReport lift = idempotents_lift(*in.ideal);
                if (!lift.all_lift) {
                    set_na(rep, "precondition failed: idempotents_lift, witness " +
                                    elem_ref(R, *lift.failing));
                    return;
                }
                RingPtr Q = quotient_ring(*in.ideal, caps);
                Census a = census_of(in.ring), b = census_of(Q);
                rep.scanned = R.size + Q->size;
                if (a.is_weakly_r_clean.value != b.is_weakly_r_clean.value)
                    set_cex(rep, "R and R/I disagree (I=" + in.ideal->describe() + ")");
            }});

        v.push_back(CheckDef{
            "C11",
            "When the 2x2 upper-triangular matrix ring over R is weakly r-clean, both diagonal "
            "coordinate rings are weakly r-clean (checked through the diagonal projections).",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c)
                    if (e.ring->ctor == FiniteRing::Ctor::triangular)
                        out.push_back(Instance{e.ring->provenance, e.ring, {}, {}, {}, {}, {}, 0});
                return out;
            },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& T = *in.ring;
                RingPtr base = in.ring->ingredients.at(0);
                Census top = census_of(in.ring);
                if (!top.is_weakly_r_clean.value) {
                    set_na(rep, "hypothesis failed: triangular ring not weakly r-clean");
                    return;
                }
                const int s = base->size;
                std::vector<Elem> pa(T.size), pc(T.size);
                for (Elem t = 0; t < T.size; ++t) {
                    pa[t] = (Elem)(t % s);
                    pc[t] = (Elem)(t / (s * s));
                }
                for (auto* img : {&pa, &pc}) {
                    if (auto err = check_ring_hom(T, *base, *img)) {
                        set_cex(rep, "diagonal projection not a homomorphism: " + *err);
                        return;
                    }
                    if (!is_surjective(*base, *img)) {
                        set_cex(rep, "diagonal projection not surjective");
                        return;
                    }
                }
                Census bot = census_of(base);
                rep.scanned = 2 * s;
                if (!bot.is_weakly_r_clean.value)
                    set_cex(rep, "diagonal ring not weakly r-clean at " +
                                     elem_ref(*base, bot.is_weakly_r_clean.witness));
            }});

        v.push_back(CheckDef{
            "C12",
            "The center of a weakly r-clean ring with no idempotents besides 0 and 1 is weakly "
            "r-clean.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_entry(c, 4096); },
            [](const Instance& in, const Caps& caps, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                if (auto e = nontrivial_idempotent(R)) {
                    set_na(rep, "precondition failed: nontrivial idempotent " + elem_ref(R, *e));
                    return;
                }
                Census full = census_of(in.ring);
                if (!full.is_weakly_r_clean.value) {
                    set_na(rep, "hypothesis failed: ring not weakly r-clean");
                    return;
                }
                RingPtr Z = center_ring(in.ring, caps);
                Census zc = census_of(Z);
                rep.scanned = Z->size;
                if (!zc.is_weakly_r_clean.value)
                    set_cex(rep, "center not weakly r-clean at " +
                                     elem_ref(*Z, zc.is_weakly_r_clean.witness));
            }});

        v.push_back(CheckDef{
            "C13",
            "The degree-zero part of a graded weakly r-clean ring is weakly r-clean.",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c)
                    for (auto& g : natural_gradings(e.ring)) {
                        Instance in;
                        in.ring = e.ring;
                        in.desc = e.ring->provenance + " grading=" + g.label;
                        in.grading = std::move(g);
                        out.push_back(std::move(in));
                    }
                return out;
            },
            [](const Instance& in, const Caps& caps, CheckReport& rep) {
                if (!in.grading) throw InputError("C13 requires a grading");
                auto errs = grading_validate(*in.grading);
                if (!errs.empty()) {
                    set_na(rep, "precondition failed: grading invalid: " + errs.front());
                    return;
                }
                Census full = census_of(in.ring);
                if (!full.is_weakly_r_clean.value) {
                    set_na(rep, "hypothesis failed: ring not weakly r-clean");
                    return;
                }
                RingPtr R0 = grading_part_zero(*in.grading, caps);
                Census c0 = census_of(R0);
                rep.scanned = R0->size;
                if (!c0.is_weakly_r_clean.value)
                    set_cex(rep, "degree-zero part not weakly r-clean at " +
                                     elem_ref(*R0, c0.is_weakly_r_clean.witness));
            }});

        v.push_back(CheckDef{
            "C14",
            "A surjective homomorphism transports weakly g(x)-r-clean decompositions: the image "
            "of a weakly g(x)-r-clean element is weakly g'(x)-r-clean, where g' applies the map "
            "to each coefficient.",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c) {
                    std::vector<Instance> surj;
                    {
                        std::vector<CorpusEntry> one = {e};
                        surj = surjection_instances(one, 36);
                    }
                    for (auto& s : surj)
                        for (const auto& g : e.polynomials) {
                            Instance in = s;
                            in.poly = g;
                            in.desc += " g=" + g.text;
                            out.push_back(std::move(in));
                        }
                }
                return out;
            },
            [](const Instance& in, const Caps& caps, CheckReport& rep) {
                if (!in.poly) throw InputError("C14 requires a polynomial");
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, nullptr, &*in.poly);
                RingPtr tgt;
                std::vector<Elem> img(R.size);
                if (in.ideal) {
                    tgt = quotient_ring(*in.ideal, caps);
                    RingMap qm = quotient_map(*in.ideal, tgt);
                    img = qm.img;
                } else {
                    tgt = in.ring->ingredients.at(in.n_param);
                    for (Elem x = 0; x < R.size; ++x)
                        img[x] = product_component(R, x, in.n_param);
                }
                std::vector<Elem> coeffs(in.poly->coeffs.size());
                for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = img[in.poly->coeffs[i]];
                CentralPolynomial g2 = make_central_poly(tgt, coeffs, in.poly->text);
                Analysis B = analyze(tgt, nullptr, &g2);
                for (Elem a = 0; a < R.size; ++a) {
                    if (!A.prof[a].weakly_g_r_clean()) continue;
                    ++rep.scanned;
                    if (!B.prof[img[a]].weakly_g_r_clean()) {
                        set_cex(rep, "image not weakly g-r-clean: a=" + elem_ref(R, a) +
                                         " -> " + elem_ref(*tgt, img[a]));
                        return;
                    }
                }
                if (A.census.is_weakly_g_r_clean->value &&
                    !B.census.is_weakly_g_r_clean->value)
                    set_cex(rep, "ring-level transport failed");
            }});

        v.push_back(CheckDef{
            "C15",
            "For an integer polynomial g, a finite direct product is weakly g(x)-r-clean "
            "exactly when every factor is weakly g(x)-r-clean and at most one factor is not "
            "g(x)-r-clean; types propagate componentwise and witnesses pass a raw audit.",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c) {
                    if (e.ring->ctor != FiniteRing::Ctor::product) continue;
                    for (const auto& g : e.polynomials) {
                        Instance in;
                        in.ring = e.ring;
                        in.poly = g;
                        in.desc = e.ring->provenance + " g=" + g.text;
                        out.push_back(std::move(in));
                    }
                }
                return out;
            },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                if (!in.poly) throw InputError("C15 requires a polynomial");
                const FiniteRing& R = *in.ring;
                const CentralPolynomial& g = *in.poly;
                Analysis Ap = analyze(in.ring, nullptr, &g);
                std::vector<Analysis> Af;
                std::vector<CentralPolynomial> gf;
                for (std::size_t i = 0; i < in.ring->ingredients.size(); ++i) {
                    const RingPtr& f = in.ring->ingredients[i];
                    std::vector<Elem> coeffs(g.coeffs.size());
                    for (std::size_t k = 0; k < coeffs.size(); ++k)
                        coeffs[k] = product_component(R, g.coeffs[k], (int)i);
                    gf.push_back(make_central_poly(f, coeffs, g.text));
                }
                for (std::size_t i = 0; i < in.ring->ingredients.size(); ++i)
                    Af.push_back(analyze(in.ring->ingredients[i], nullptr, &gf[i]));
                bool lhs = Ap.census.is_weakly_g_r_clean->value;
                bool all_w = true;
                int not_plain = 0;
                for (const auto& a : Af) {
                    if (!a.census.is_weakly_g_r_clean->value) all_w = false;
                    if (!a.census.is_g_r_clean->value) ++not_plain;
                }
                bool rhs = all_w && not_plain <= 1;
                if (lhs != rhs) {
                    set_cex(rep, "biconditional failed");
                    return;
                }
                for (Elem x = 0; x < R.size; ++x) {
                    ++rep.scanned;
                    bool t1 = Ap.prof[x].weakly_g_r_clean_t1();
                    bool t2 = Ap.prof[x].weakly_g_r_clean_t2();
                    bool t1c = true, t2c = true;
                    for (std::size_t i = 0; i < Af.size(); ++i) {
                        Elem xi = product_component(R, x, (int)i);
                        if (!Af[i].prof[xi].weakly_g_r_clean_t1()) t1c = false;
                        if (!Af[i].prof[xi].weakly_g_r_clean_t2()) t2c = false;
                    }
                    if (t1 != t1c || t2 != t2c) {
                        set_cex(rep, "componentwise bookkeeping failed at x=" + elem_ref(R, x));
                        return;
                    }
                    if (t1 || t2) {
                        const std::optional<Decomp>& w =
                            t1 ? Ap.prof[x].g_r_clean_w : Ap.prof[x].weakly_g_r_clean_t2_w;
                        Elem r = w->part1, s = w->part2;
                        if (g.eval(s) != R.zero ||
                            (t1 ? R.add(r, s) : R.sub(r, s)) != x || !raw_regular(R, r)) {
                            set_cex(rep, "raw witness audit failed at x=" + elem_ref(R, x));
                            return;
                        }
                    }
                }
                if (not_plain == 0)
                    rep.witness = "note: every factor is g(x)-r-clean; the at-most-one-exception "
                                  "clause is not separately exercised";
            }});

        v.push_back(CheckDef{
            "C16",
            "For central a != 0 and central b, a ring is weakly (a x^{2n} - b x)-r-clean exactly "
            "when it is weakly (a x^{2n} + b x)-r-clean (n = 1, 2).",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_entry(c, 36); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                BasicSets S = basic_sets(R);
                for (int n = 1; n <= 2; ++n) {
                    const int deg = 2 * n;
                    for (Elem a : S.centrals) {
                        if (a == R.zero) continue;
                        for (Elem b : S.centrals) {
                            ++rep.scanned;
                            std::vector<Elem> c1((std::size_t)deg + 1, R.zero);
                            std::vector<Elem> c2((std::size_t)deg + 1, R.zero);
                            c1[deg] = a;
                            c2[deg] = a;
                            c1[1] = R.neg(b);
                            c2[1] = b;
                            CentralPolynomial g1{in.ring, std::move(c1), "a*x^2n-b*x"};
                            CentralPolynomial g2{in.ring, std::move(c2), "a*x^2n+b*x"};
                            bool v1 = !weak_root_cover_failure(R, S.reg, poly_roots(g1));
                            bool v2 = !weak_root_cover_failure(R, S.reg, poly_roots(g2));
                            if (v1 != v2) {
                                set_cex(rep, "verdicts differ at a=" + elem_ref(R, a) +
                                                 ", b=" + elem_ref(R, b) +
                                                 ", n=" + std::to_string(n));
                                return;
                            }
                        }
                    }
                }
            }});

        v.push_back(CheckDef{
            "C17",
            "If every element is a regular element plus or minus some t with t^{n-1} = 1, the "
            "ring is weakly (x^n - x)-r-clean (n = 2, 3).",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c)
                    for (int n : {2, 3}) {
                        Instance in;
                        in.ring = e.ring;
                        in.n_param = n;
                        in.desc = e.ring->provenance + " n=" + std::to_string(n);
                        out.push_back(std::move(in));
                    }
                return out;
            },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                const int n = in.n_param;
                BasicSets S = basic_sets(R);
                std::vector<Elem> T;
                for (Elem t = 0; t < R.size; ++t)
                    if (R.pow(t, n - 1) == R.one) T.push_back(t);
                for (Elem a = 0; a < R.size; ++a) {
                    ++rep.scanned;
                    bool ok = false;
                    for (Elem t : T)
                        if (S.reg[R.sub(a, t)] || S.reg[R.add(a, t)]) { ok = true; break; }
                    if (!ok) {
                        set_na(rep, "hypothesis failed: no r +/- t with t^{n-1}=1 covers " +
                                        elem_ref(R, a));
                        return;
                    }
                }
                std::vector<long> ic((std::size_t)n + 1, 0);
                ic[1] = -1;
                ic[n] = 1;
                CentralPolynomial g = make_int_poly(in.ring, ic, "x^n-x");
                if (auto bad = weak_root_cover_failure(R, S.reg, poly_roots(g)))
                    set_cex(rep, "not weakly (x^n-x)-r-clean at " + elem_ref(R, *bad));
            }});

        v.push_back(CheckDef{
            "C18",
            "An element of the corner e^{n-1} R e^{n-1} (e^n = e) that is strongly "
            "(x^n - x)-clean in the corner is strongly (x^n - x)-clean in the whole ring via "
            "the lift v = u - (1 - e^{n-1}) (n = 2, 3).",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c) {
                    if (e.ring->size > 100) continue;
                    for (int n : {2, 3}) {
                        Instance in;
                        in.ring = e.ring;
                        in.n_param = n;
                        in.desc = e.ring->provenance + " n=" + std::to_string(n);
                        out.push_back(std::move(in));
                    }
                }
                return out;
            },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                const int n = in.n_param;
                auto is_root = [&](Elem f) { return R.pow(f, n) == f; };
                for (Elem ep = 0; ep < R.size; ++ep) {
                    // ep plays e^{n-1}: realized by e = ep since ep^n = ep for idempotent ep
                    if (R.mul(ep, ep) != ep || ep == R.zero) continue;
                    CornerView cv = corner_view(R, ep);
                    Elem c1 = R.sub(R.one, ep);
                    for (Elem a : cv.members) {
                        // lex-least strongly (x^n-x)-clean witness inside the corner
                        std::optional<std::pair<Elem, Elem>> best;  // (u, f)
                        std::optional<Elem> winv;
                        for (Elem f : cv.members) {
                            if (!is_root(f)) continue;
                            Elem u = R.sub(a, f);
                            if (R.mul(u, f) != R.mul(f, u)) continue;
                            for (const auto& [cu, cw] : cv.units)
                                if (cu == u) {
                                    if (!best || std::make_pair(u, f) < *best) {
                                        best = std::make_pair(u, f);
                                        winv = cw;
                                    }
                                    break;
                                }
                        }
                        if (!best) continue;
                        ++rep.scanned;
                        auto [u, f] = *best;
                        Elem vl = R.sub(u, c1), wl = R.sub(*winv, c1);
                        Elem ebar = R.add(f, c1);
                        if (R.mul(vl, wl) != R.one || R.mul(wl, vl) != R.one ||
                            !is_root(ebar) || R.mul(vl, ebar) != R.mul(ebar, vl) ||
                            R.add(vl, ebar) != a) {
                            set_cex(rep, "lift failed: e^{n-1}=" + elem_ref(R, ep) +
                                             ", a=" + elem_ref(R, a) + ", u=" + elem_ref(R, u) +
                                             ", f=" + elem_ref(R, f));
                            return;
                        }
                    }
                }
            }});

        v.push_back(CheckDef{
            "C19",
            "In an abelian ring, if a is (x^n - x)-clean then a e^{n-1} is (x^n - x)-clean for "
            "every root e of x^n - x (n = 2, 3).",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c)
                    for (const auto& g : e.polynomials) {
                        if (g.text != "x^2-x" && g.text != "x^3-x") continue;
                        Instance in;
                        in.ring = e.ring;
                        in.poly = g;
                        in.n_param = g.degree();
                        in.desc = e.ring->provenance + " g=" + g.text;
                        out.push_back(std::move(in));
                    }
                return out;
            },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                if (!in.poly) throw InputError("C19 requires a polynomial");
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, nullptr, &*in.poly);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                const int n = in.n_param;
                for (Elem a = 0; a < R.size; ++a) {
                    if (!A.prof[a].g_clean()) continue;
                    for (Elem e : A.roots) {
                        ++rep.scanned;
                        Elem x = R.mul(a, R.pow(e, n - 1));
                        if (!A.prof[x].g_clean()) {
                            set_cex(rep, "a*e^{n-1} not g-clean: a=" + elem_ref(R, a) +
                                             ", e=" + elem_ref(R, e));
                            return;
                        }
                    }
                }
            }});

        v.push_back(CheckDef{
            "C20",
            "A boolean star-ring is weakly star-clean exactly when its involution is the "
            "identity map.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                if (!A.census.boolean_ring) {
                    Elem x = 0;
                    for (Elem y = 0; y < R.size; ++y)
                        if (R.mul(y, y) != y) { x = y; break; }
                    set_na(rep, "precondition failed: ring not boolean, witness " +
                                    elem_ref(R, x));
                    return;
                }
                rep.scanned = R.size;
                bool lhs = A.census.is_weakly_star_clean->value;
                bool rhs = in.star->is_identity();
                if (lhs != rhs) {
                    if (lhs)
                        set_cex(rep, "weakly star-clean but involution moves " +
                                         [&] {
                                             for (Elem y = 0; y < R.size; ++y)
                                                 if (in.star->tab[y] != y)
                                                     return elem_ref(R, y);
                                             return std::string("?");
                                         }());
                    else
                        set_cex(rep, "identity involution but not weakly star-clean at " +
                                         elem_ref(R, A.census.is_weakly_star_clean->witness));
                }
            }});

        v.push_back(CheckDef{
            "C21",
            "In a star-ring with 2 invertible, every square root of 1 is self-adjoint exactly "
            "when every idempotent is a projection.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                if (!A.census.two_invertible) {
                    set_na(rep, "precondition failed: 2 not invertible");
                    return;
                }
                std::optional<Elem> bad_u;
                for (Elem u = 0; u < R.size; ++u) {
                    if (R.mul(u, u) != R.one) continue;
                    ++rep.scanned;
                    if (in.star->tab[u] != u) { bad_u = u; break; }
                }
                std::optional<Elem> bad_e;
                for (Elem e : A.sets.idems) {
                    ++rep.scanned;
                    if (in.star->tab[e] != e) { bad_e = e; break; }
                }
                if (bad_u.has_value() != bad_e.has_value()) {
                    if (bad_u)
                        set_cex(rep, "square root of 1 not self-adjoint (" +
                                         elem_ref(R, *bad_u) +
                                         ") yet every idempotent is a projection");
                    else
                        set_cex(rep, "all square roots of 1 self-adjoint yet idempotent " +
                                         elem_ref(R, *bad_e) + " is not a projection");
                }
            }});

        v.push_back(CheckDef{
            "C22",
            "In a star-ring with 2 invertible, weak cleanness with all units self-adjoint is "
            "equivalent to weak star-cleanness with identity involution.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                if (!A.census.two_invertible) {
                    set_na(rep, "precondition failed: 2 not invertible");
                    return;
                }
                bool units_sa = true;
                for (Elem u : A.sets.units) {
                    ++rep.scanned;
                    if (in.star->tab[u] != u) { units_sa = false; break; }
                }
                bool lhs = A.census.is_weakly_clean.value && units_sa;
                bool rhs = A.census.is_weakly_star_clean->value && in.star->is_identity();
                rep.scanned += R.size;
                if (lhs != rhs)
                    set_cex(rep, std::string("sides disagree: left=") + (lhs ? "true" : "false") +
                                     ", right=" + (rhs ? "true" : "false"));
            }});

        v.push_back(CheckDef{
            "C23",
            "A star-ring is weakly star-clean with 2 invertible exactly when every element is "
            "a unit plus either a self-adjoint square root of 1 or an element 2p + 1 with p a "
            "projection.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                bool lhs = A.census.is_weakly_star_clean->value && A.census.two_invertible;
                bool rhs = true;
                Elem bad = 0;
                for (Elem a = 0; a < R.size; ++a) {
                    ++rep.scanned;
                    if (!A.prof[a].sasr1() && !A.prof[a].two_p_plus_one()) {
                        rhs = false;
                        bad = a;
                        break;
                    }
                }
                if (lhs != rhs) {
                    if (lhs)
                        set_cex(rep, "no qualifying decomposition for " + elem_ref(R, bad));
                    else
                        set_cex(rep, "decompositions exist although left side fails");
                }
            }});

        v.push_back(CheckDef{
            "C24",
            "Quotients of a weakly star-clean ring by star-invariant ideals carry an induced "
            "involution and are weakly star-clean (the Jacobson radical included).",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps& caps, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                if (!A.census.is_weakly_star_clean->value) {
                    set_na(rep, "hypothesis failed: ring not weakly star-clean, witness " +
                                    elem_ref(R, A.census.is_weakly_star_clean->witness));
                    return;
                }
                std::vector<Ideal> fam;
                if (R.size <= 36)
                    fam = ideal_family(in.ring, true);
                else {
                    Ideal J = jacobson_radical(in.ring);
                    if (!J.is_whole_ring()) fam.push_back(std::move(J));
                }
                for (const auto& I : fam) {
                    if (!star_invariant_ideal(*in.star, I)) continue;
                    auto sq = star_quotient(*in.star, I, caps);
                    if (!sq) {
                        set_cex(rep, "induced involution failed on quotient by " + I.describe());
                        return;
                    }
                    Census qc = census_of(sq->ring, &sq->star);
                    rep.scanned += sq->ring->size;
                    if (!qc.is_weakly_star_clean->value) {
                        set_cex(rep, "quotient by " + I.describe() +
                                         " not weakly star-clean at " +
                                         elem_ref(*sq->ring, qc.is_weakly_star_clean->witness));
                        return;
                    }
                }
            }});

        v.push_back(CheckDef{
            "C25",
            "A truncated power-series ring with the coefficientwise involution is weakly "
            "star-clean exactly when the base star-ring is; the truncation level is recorded.",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c) {
                    if (e.ring->ctor != FiniteRing::Ctor::trunc) continue;
                    // identity-twist truncations only: the coefficientwise star needs x*a = a*x
                    if (e.ring->provenance.find(", id,") == std::string::npos) continue;
                    RingPtr base = e.ring->ingredients.at(0);
                    for (const auto& inv : e.involutions) {
                        bool coeffwise = true;
                        for (Elem b = 0; b < base->size; ++b)
                            if (inv.tab[b] >= base->size) { coeffwise = false; break; }
                        if (!coeffwise) continue;
                        Instance in;
                        in.ring = e.ring;
                        in.star = inv;
                        in.desc = desc_star(e.ring, inv);
                        in.n_param = e.ring->params.empty() ? 0 : e.ring->params[0];
                        out.push_back(std::move(in));
                    }
                }
                return out;
            },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                RingPtr base = in.ring->ingredients.at(0);
                // restrict to constants; constants embed as ids [0, |base|)
                std::vector<Elem> btab(base->size);
                for (Elem b = 0; b < base->size; ++b) btab[b] = in.star->tab[b];
                Involution bstar = validate_involution(base, std::move(btab), "restricted");
                Census top = census_of(in.ring, &*in.star);
                Census bot = census_of(base, &bstar);
                rep.scanned = in.ring->size + base->size;
                if (top.is_weakly_star_clean->value != bot.is_weakly_star_clean->value) {
                    set_cex(rep, "truncated ring and base disagree");
                    return;
                }
                rep.witness = "note: truncation level " + std::to_string(in.n_param) +
                              "; converse direction checked at this level only";
            }});

        v.push_back(CheckDef{
            "C26",
            "Star-preserving surjective images of a weakly star-clean ring are weakly "
            "star-clean (coordinate projections of products with componentwise involutions).",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c) {
                    if (e.ring->ctor != FiniteRing::Ctor::product) continue;
                    for (auto& cs : componentwise_stars(e.ring))
                        for (std::size_t i = 0; i < e.ring->ingredients.size(); ++i) {
                            Instance in;
                            in.ring = e.ring;
                            in.star = cs.prod;
                            in.factor_stars = cs.comps;
                            in.n_param = (int)i;
                            in.desc = desc_star(e.ring, cs.prod) + " proj " + std::to_string(i);
                            out.push_back(std::move(in));
                        }
                }
                return out;
            },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                Census src = census_of(in.ring, &*in.star);
                if (!src.is_weakly_star_clean->value) {
                    set_na(rep, "hypothesis failed: source not weakly star-clean, witness " +
                                    elem_ref(*in.ring, src.is_weakly_star_clean->witness));
                    return;
                }
                RingPtr tgt = in.ring->ingredients.at(in.n_param);
                const Involution& tstar = in.factor_stars.at(in.n_param);
                Census t = census_of(tgt, &tstar);
                rep.scanned = tgt->size;
                if (!t.is_weakly_star_clean->value)
                    set_cex(rep, "image not weakly star-clean at " +
                                     elem_ref(*tgt, t.is_weakly_star_clean->witness));
            }});

        v.push_back(CheckDef{
            "C27",
            "A finite direct product with componentwise involution is weakly star-clean "
            "exactly when every factor is weakly star-clean and at most one factor is not "
            "star-clean; types propagate componentwise and witnesses pass a raw audit.",
            [](const std::vector<CorpusEntry>& c, const Caps&) {
                std::vector<Instance> out;
                for (const auto& e : c) {
                    if (e.ring->ctor != FiniteRing::Ctor::product) continue;
                    for (auto& cs : componentwise_stars(e.ring)) {
                        Instance in;
                        in.ring = e.ring;
                        in.star = cs.prod;
                        in.factor_stars = cs.comps;
                        in.desc = desc_star(e.ring, cs.prod);
                        out.push_back(std::move(in));
                    }
                }
                return out;
            },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis Ap = analyze(in.ring, &*in.star);
                std::vector<Analysis> Af;
                for (std::size_t i = 0; i < in.ring->ingredients.size(); ++i)
                    Af.push_back(analyze(in.ring->ingredients[i], &in.factor_stars[i]));
                bool lhs = Ap.census.is_weakly_star_clean->value;
                bool all_w = true;
                int not_sc = 0;
                for (const auto& a : Af) {
                    if (!a.census.is_weakly_star_clean->value) all_w = false;
                    if (!a.census.is_star_clean->value) ++not_sc;
                }
                bool rhs = all_w && not_sc <= 1;
                if (lhs != rhs) {
                    set_cex(rep, "biconditional failed");
                    return;
                }
                for (Elem x = 0; x < R.size; ++x) {
                    ++rep.scanned;
                    bool t1 = Ap.prof[x].weakly_star_clean_t1();
                    bool t2 = Ap.prof[x].weakly_star_clean_t2();
                    bool t1c = true, t2c = true;
                    for (std::size_t i = 0; i < Af.size(); ++i) {
                        Elem xi = product_component(R, x, (int)i);
                        if (!Af[i].prof[xi].weakly_star_clean_t1()) t1c = false;
                        if (!Af[i].prof[xi].weakly_star_clean_t2()) t2c = false;
                    }
                    if (t1 != t1c || t2 != t2c) {
                        set_cex(rep, "componentwise bookkeeping failed at x=" + elem_ref(R, x));
                        return;
                    }
                    if (t1 || t2) {
                        const std::optional<Decomp>& w =
                            t1 ? Ap.prof[x].star_clean_w : Ap.prof[x].weakly_star_clean_t2_w;
                        Elem u = w->part1, p = w->part2;
                        if (R.mul(p, p) != p || in.star->tab[p] != p ||
                            (t1 ? R.add(u, p) : R.sub(u, p)) != x || !raw_inverse(R, u)) {
                            set_cex(rep, "raw witness audit failed at x=" + elem_ref(R, x));
                            return;
                        }
                    }
                }
                if (not_sc == 0)
                    rep.witness = "note: every factor is star-clean; the at-most-one-exception "
                                  "clause is not separately exercised";
            }});

        v.push_back(CheckDef{
            "C28",
            "An element of the corner eRe (e a projection) that is strongly star-clean in the "
            "corner is strongly star-clean in the whole ring via the lift v - (1-e) with "
            "projection part f + (1-e).",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 100); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                const Involution& st = *in.star;
                for (Elem e = 0; e < R.size; ++e) {
                    if (R.mul(e, e) != e || st.tab[e] != e || e == R.zero) continue;
                    CornerView cv = corner_view(R, e);
                    Elem c1 = R.sub(R.one, e);
                    for (Elem a : cv.members) {
                        std::optional<std::pair<Elem, Elem>> best;  // (v, f)
                        std::optional<Elem> winv;
                        for (Elem f : cv.idems) {
                            if (st.tab[f] != f) continue;
                            Elem u = R.sub(a, f);
                            if (R.mul(u, f) != R.mul(f, u)) continue;
                            for (const auto& [cu, cw] : cv.units)
                                if (cu == u) {
                                    if (!best || std::make_pair(u, f) < *best) {
                                        best = std::make_pair(u, f);
                                        winv = cw;
                                    }
                                    break;
                                }
                        }
                        if (!best) continue;
                        ++rep.scanned;
                        auto [u, f] = *best;
                        Elem vl = R.sub(u, c1), wl = R.sub(*winv, c1);
                        Elem fbar = R.add(f, c1);
                        if (R.mul(vl, wl) != R.one || R.mul(wl, vl) != R.one ||
                            R.mul(fbar, fbar) != fbar || st.tab[fbar] != fbar ||
                            R.mul(vl, fbar) != R.mul(fbar, vl) || R.add(vl, fbar) != a) {
                            set_cex(rep, "lift failed: e=" + elem_ref(R, e) +
                                             ", a=" + elem_ref(R, a));
                            return;
                        }
                    }
                }
            }});

        v.push_back(CheckDef{
            "C29",
            "In an abelian star-ring, the product ae of a star-clean element a and a "
            "projection e is star-clean.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                for (Elem a = 0; a < R.size; ++a) {
                    if (!A.prof[a].star_clean()) continue;
                    for (Elem e : A.projs) {
                        ++rep.scanned;
                        if (!A.prof[R.mul(a, e)].star_clean()) {
                            set_cex(rep, "ae not star-clean: a=" + elem_ref(R, a) +
                                             ", e=" + elem_ref(R, e));
                            return;
                        }
                    }
                }
            }});

        v.push_back(CheckDef{
            "C30",
            "In an abelian star-ring, when a and -a are both star-clean, a + e is star-clean "
            "for every projection e.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                for (Elem a = 0; a < R.size; ++a) {
                    if (!A.prof[a].star_clean() || !A.prof[R.neg(a)].star_clean()) continue;
                    for (Elem e : A.projs) {
                        ++rep.scanned;
                        if (!A.prof[R.add(a, e)].star_clean()) {
                            set_cex(rep, "a+e not star-clean: a=" + elem_ref(R, a) +
                                             ", e=" + elem_ref(R, e));
                            return;
                        }
                    }
                }
            }});

        v.push_back(CheckDef{
            "C31",
            "In an abelian star-ring where every idempotent of the form ry or yr (r regular) "
            "is a projection, every regular element is star-clean.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                for (Elem r : A.sets.regs)
                    for (Elem y = 0; y < R.size; ++y)
                        for (Elem e : {R.mul(r, y), R.mul(y, r)})
                            if (R.mul(e, e) == e && in.star->tab[e] != e) {
                                set_na(rep,
                                       "precondition failed: idempotent " + elem_ref(R, e) +
                                           " = product of regular " + elem_ref(R, r) +
                                           " and " + elem_ref(R, y) + " is not a projection");
                                return;
                            }
                for (Elem r : A.sets.regs) {
                    ++rep.scanned;
                    if (!A.prof[r].star_clean()) {
                        set_cex(rep, "regular element not star-clean: " + elem_ref(R, r));
                        return;
                    }
                }
            }});

        v.push_back(CheckDef{
            "C32",
            "In an abelian star-ring where every idempotent of the form ry or yr (r regular) "
            "is a projection, the ring is star-r-clean exactly when it is star-clean, element "
            "by element.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                if (!A.census.abelian) {
                    set_na(rep, "precondition failed: ring not abelian, noncentral idempotent " +
                                    elem_ref(R, *noncentral_idempotent(R)));
                    return;
                }
                for (Elem r : A.sets.regs)
                    for (Elem y = 0; y < R.size; ++y)
                        for (Elem e : {R.mul(r, y), R.mul(y, r)})
                            if (R.mul(e, e) == e && in.star->tab[e] != e) {
                                set_na(rep, "precondition failed: idempotent " + elem_ref(R, e) +
                                                " of the form ry/yr is not a projection");
                                return;
                            }
                for (Elem x = 0; x < R.size; ++x) {
                    ++rep.scanned;
                    if (A.prof[x].star_r_clean() != A.prof[x].star_clean()) {
                        set_cex(rep, "element-level mismatch at " + elem_ref(R, x));
                        return;
                    }
                }
                if (A.census.is_star_r_clean->value != A.census.is_star_clean->value)
                    set_cex(rep, "ring-level mismatch");
            }});

        v.push_back(CheckDef{
            "C33",
            "Units, Jacobson-radical elements, and nilpotents of a star-ring are weakly "
            "star-clean.",
            [](const std::vector<CorpusEntry>& c, const Caps&) { return every_starred(c, 4096); },
            [](const Instance& in, const Caps&, CheckReport& rep) {
                const FiniteRing& R = *in.ring;
                Analysis A = analyze(in.ring, &*in.star);
                auto need = [&](const std::vector<Elem>& xs, const char* what,
                                CheckReport& r2) {
                    for (Elem x : xs) {
                        ++r2.scanned;
                        if (!A.prof[x].weakly_star_clean()) {
                            set_cex(r2, std::string(what) + " not weakly star-clean: " +
                                            elem_ref(R, x));
                            return false;
                        }
                    }
                    return true;
                };
                if (!need(A.sets.units, "unit", rep)) return;
                if (!need(A.sets.jacs, "radical element", rep)) return;
                need(A.sets.nils, "nilpotent", rep);
            }});

        return v;
    }();
    return defs;
}

inline const CheckDef& check_def(const std::string& id) {
    for (const auto& d : check_catalog())
        if (d.id == id) return d;
    throw InputError("unknown check '" + id + "'");
}

inline CheckReport run_check(const CheckDef& def, const Instance& in,
                             const Caps& caps = default_caps()) {
    CheckReport rep;
    rep.id = def.id;
    rep.statement = def.statement;
    rep.inputs = in.desc.empty() ? in.ring->provenance : in.desc;
    auto t0 = std::chrono::steady_clock::now();
    def.eval(in, caps, rep);
    auto t1 = std::chrono::steady_clock::now();
    rep.nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    return rep;
}

inline CheckReport run_check(const std::string& id, const Instance& in,
                             const Caps& caps = default_caps()) {
    return run_check(check_def(id), in, caps);
}

inline std::vector<CheckReport> run_suite(const std::vector<CorpusEntry>& corpus,
                                          const Caps& caps = default_caps(),
                                          const std::vector<std::string>& ids = {}) {
    std::vector<CheckReport> out;
    for (const auto& def : check_catalog()) {
        if (!ids.empty() &&
            std::find(ids.begin(), ids.end(), def.id) == ids.end())
            continue;
        for (const auto& in : def.gather(corpus, caps))
            out.push_back(run_check(def, in, caps));
    }
    return out;
}

struct SuiteSummary {
    long verified = 0, counterexamples = 0, not_applicable = 0;
    long non_vacuous_checks = 0;  // checks with >= 1 verified instance that scanned > 0
};

inline SuiteSummary summarize(const std::vector<CheckReport>& reports) {
    SuiteSummary s;
    std::vector<std::string> seen;
    for (const auto& r : reports) {
        switch (r.status) {
            case CheckStatus::verified: ++s.verified; break;
            case CheckStatus::counterexample: ++s.counterexamples; break;
            case CheckStatus::not_applicable: ++s.not_applicable; break;
        }
        if (r.status == CheckStatus::verified && r.scanned > 0 &&
            std::find(seen.begin(), seen.end(), r.id) == seen.end())
            seen.push_back(r.id);
    }
    s.non_vacuous_checks = (long)seen.size();
    return s;
}

} // namespace ringlab
