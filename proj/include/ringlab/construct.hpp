#pragma once

// Ring constructors.  Every function returns a validated RingPtr whose
// provenance string is the canonical constructor expression (and parses back
// to an identical ring).
//
// Element id conventions, fixed and relied on by tests:
//   Zn(n)          id = residue
//   polyq(n,f)     residue polynomials of degree < deg f; id = sum c_i n^i
//                  (constant coefficient least significant)
//   product(...)   mixed radix, FIRST factor least significant
//   M(S,k)         entries row-major, entry (0,0) least significant
//   tri(S)         [[a,b],[0,c]] -> a + b*s + c*s^2
//   trunc(S,t,N)   sum a_i X^i -> sum a_i s^i (constant least significant)
//   corner/center  elements sorted by parent id
//   quot           cosets sorted by least representative id

#include <algorithm>
#include <string>
#include <vector>

#include "common.hpp"
#include "map.hpp"
#include "poly_parse.hpp"
#include "ring.hpp"

namespace ringlab {

inline RingPtr make_zn(int n, const Caps& caps = default_caps()) {
    if (n < 2) throw InputError("Zn requires n >= 2");
    if (n > caps.global_cap) throw CapError("Zn(" + std::to_string(n) + ") exceeds the global cap");
    std::vector<Elem> add((std::size_t)n * n), mul((std::size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[(std::size_t)a * n + b] = (Elem)((a + b) % n);
            mul[(std::size_t)a * n + b] = (Elem)((a * b) % n);
        }
    auto r = std::const_pointer_cast<FiniteRing>(
        build_ring(n, std::move(add), std::move(mul), 0, 1, {}, "Zn(" + std::to_string(n) + ")", caps));
    r->ctor = FiniteRing::Ctor::zn;
    r->params = {n};
    return r;
}

namespace detail {

// arithmetic on residue-coefficient vectors mod n
inline std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                    const std::vector<int>& f, int n) {
    std::vector<int> p(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            p[i + j] = (p[i + j] + a[i] * b[j]) % n;
    // reduce by the monic modulus f
    int d = (int)f.size() - 1;
    for (int k = (int)p.size() - 1; k >= d; --k) {
        int c = p[k];
        if (c == 0) continue;
        p[k] = 0;
        for (int i = 0; i < d; ++i)
            p[k - d + i] = ((p[k - d + i] - c * f[i]) % n + n * n) % n;
    }
    p.resize(d);
    return p;
}

inline std::string poly_elem_name(const std::vector<int>& c) {
    std::string out;
    for (std::size_t d = 0; d < c.size(); ++d) {
        if (c[d] == 0) continue;
        if (!out.empty()) out += "+";
        if (d == 0) out += std::to_string(c[d]);
        else {
            if (c[d] != 1) out += std::to_string(c[d]);
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

// Z_n[x] / (f) for a modulus that is monic of degree >= 1 after reduction
// mod n.  `poly_text` uses the '+'-only polynomial grammar.
inline RingPtr make_poly_quotient(int n, const std::string& poly_text,
                                  const Caps& caps = default_caps()) {
    if (n < 2) throw InputError("polyq requires modulus n >= 2");
    std::vector<long> raw = parse_poly_text(poly_text);
    std::vector<int> f(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) f[i] = (int)(((raw[i] % n) + n) % n);
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    int d = (int)f.size() - 1;
    if (d < 1) throw InputError("polyq modulus must have degree >= 1 after reduction mod n");
    if (f.back() != 1) throw InputError("polyq modulus must be monic (leading coefficient 1 mod n)");

    long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= n;
        if (size > caps.global_cap) throw CapError("polyq result exceeds the global cap");
    }
    auto decode = [&](long id) {
        std::vector<int> c(d);
        for (int i = 0; i < d; ++i) { c[i] = (int)(id % n); id /= n; }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        long id = 0;
        for (int i = d - 1; i >= 0; --i) id = id * n + c[i];
        return (Elem)id;
    };

    std::vector<Elem> add(size * size), mul(size * size);
    std::vector<std::string> names(size);
    std::vector<long> fl(f.begin(), f.end());
    for (long a = 0; a < size; ++a) {
        auto ca = decode(a);
        names[a] = detail::poly_elem_name(ca);
        for (long b = 0; b < size; ++b) {
            auto cb = decode(b);
            std::vector<int> s(d);
            for (int i = 0; i < d; ++i) s[i] = (ca[i] + cb[i]) % n;
            add[a * size + b] = encode(s);
            mul[a * size + b] = encode(detail::poly_mulmod(ca, cb, f, n));
        }
    }
    std::string prov = "polyq(" + std::to_string(n) + ", " + render_poly(std::vector<long>(f.begin(), f.end())) + ")";
    auto r = std::const_pointer_cast<FiniteRing>(
        build_ring((int)size, std::move(add), std::move(mul), 0, encode([&] {
            std::vector<int> o(d, 0);
            o[0] = 1 % n;
            return o;
        }()), std::move(names), prov, caps));
    r->ctor = FiniteRing::Ctor::polyq;
    r->params.push_back(n);
    for (int c : f) r->params.push_back(c);
    return r;
}

inline RingPtr direct_product(const std::vector<RingPtr>& factors,
                              const Caps& caps = default_caps()) {
    if (factors.size() < 2) throw InputError("product requires at least two factors");
    long size = 1;
    for (const auto& f : factors) {
        size *= f->size;
        if (size > caps.global_cap) throw CapError("product exceeds the global cap");
    }
    auto decode = [&](long id, std::vector<Elem>& out) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            out[i] = (Elem)(id % factors[i]->size);
            id /= factors[i]->size;
        }
    };
    auto encode = [&](const std::vector<Elem>& xs) {
        long id = 0;
        for (std::size_t i = factors.size(); i-- > 0;) id = id * factors[i]->size + xs[i];
        return (Elem)id;
    };
    std::vector<Elem> add(size * size), mul(size * size);
    std::vector<std::string> names(size);
    std::vector<Elem> xa(factors.size()), xb(factors.size()), t(factors.size());
    std::vector<Elem> one_t(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) one_t[i] = factors[i]->one;
    for (long a = 0; a < size; ++a) {
        decode(a, xa);
        std::string nm = "(";
        for (std::size_t i = 0; i < factors.size(); ++i)
            nm += (i ? "," : "") + factors[i]->name(xa[i]);
        names[a] = nm + ")";
        for (long b = 0; b < size; ++b) {
            decode(b, xb);
            for (std::size_t i = 0; i < factors.size(); ++i) t[i] = factors[i]->add(xa[i], xb[i]);
            add[a * size + b] = encode(t);
            for (std::size_t i = 0; i < factors.size(); ++i) t[i] = factors[i]->mul(xa[i], xb[i]);
            mul[a * size + b] = encode(t);
        }
    }
    std::string prov = "product(";
    for (std::size_t i = 0; i < factors.size(); ++i)
        prov += (i ? ", " : "") + factors[i]->provenance;
    prov += ")";
    auto r = std::const_pointer_cast<FiniteRing>(
        build_ring((int)size, std::move(add), std::move(mul), 0, encode(one_t), std::move(names), prov, caps));
    r->ctor = FiniteRing::Ctor::product;
    r->ingredients = factors;
    return r;
}

// project a product element onto one factor
inline Elem product_component(const FiniteRing& prod, Elem x, std::size_t i) {
    long id = x;
    for (std::size_t j = 0; j < i; ++j) id /= prod.ingredients[j]->size;
    return (Elem)(id % prod.ingredients[i]->size);
}

inline Elem product_assemble(const FiniteRing& prod, const std::vector<Elem>& xs) {
    long id = 0;
    for (std::size_t i = prod.ingredients.size(); i-- > 0;)
        id = id * prod.ingredients[i]->size + xs[i];
    return (Elem)id;
}

inline RingPtr matrix_ring(const RingPtr& base, int k, const Caps& caps = default_caps()) {
    if (k < 1) throw InputError("M requires k >= 1");
    long size = 1;
    for (int i = 0; i < k * k; ++i) {
        size *= base->size;
        if (size > caps.global_cap) throw CapError("matrix ring exceeds the global cap");
    }
    const int s = base->size;
    auto decode = [&](long id, std::vector<Elem>& m) {
        for (int p = 0; p < k * k; ++p) { m[p] = (Elem)(id % s); id /= s; }
    };
    auto encode = [&](const std::vector<Elem>& m) {
        long id = 0;
        for (int p = k * k; p-- > 0;) id = id * s + m[p];
        return (Elem)id;
    };
    std::vector<Elem> add(size * size), mul(size * size);
    std::vector<std::string> names(size);
    std::vector<Elem> ma(k * k), mb(k * k), mc(k * k);
    for (long a = 0; a < size; ++a) {
        decode(a, ma);
        std::string nm = "[";
        for (int r0 = 0; r0 < k; ++r0) {
            nm += r0 ? ",[" : "[";
            for (int c0 = 0; c0 < k; ++c0)
                nm += (c0 ? "," : "") + base->name(ma[r0 * k + c0]);
            nm += "]";
        }
        names[a] = nm + "]";
        for (long b = 0; b < size; ++b) {
            decode(b, mb);
            for (int p = 0; p < k * k; ++p) mc[p] = base->add(ma[p], mb[p]);
            add[a * size + b] = encode(mc);
            for (int r0 = 0; r0 < k; ++r0)
                for (int c0 = 0; c0 < k; ++c0) {
                    Elem acc = base->zero;
                    for (int t0 = 0; t0 < k; ++t0)
                        acc = base->add(acc, base->mul(ma[r0 * k + t0], mb[t0 * k + c0]));
                    mc[r0 * k + c0] = acc;
                }
            mul[a * size + b] = encode(mc);
        }
    }
    std::vector<Elem> id_m(k * k, base->zero);
    for (int i = 0; i < k; ++i) id_m[i * k + i] = base->one;
    std::string prov = "M(" + base->provenance + ", " + std::to_string(k) + ")";
    auto r = std::const_pointer_cast<FiniteRing>(
        build_ring((int)size, std::move(add), std::move(mul), 0, encode(id_m), std::move(names), prov, caps));
    r->ctor = FiniteRing::Ctor::matrix;
    r->ingredients = {base};
    r->params = {k};
    return r;
}

// 2x2 upper triangular matrices [[a,b],[0,c]] over the base.
inline RingPtr triangular_ring(const RingPtr& base, const Caps& caps = default_caps()) {
    const long s = base->size;
    long size = s * s * s;
    if (size > caps.global_cap) throw CapError("triangular ring exceeds the global cap");
    auto enc = [&](Elem a, Elem b, Elem c) { return (Elem)(a + b * s + c * s * s); };
    std::vector<Elem> add(size * size), mul(size * size);
    std::vector<std::string> names(size);
    for (long x = 0; x < size; ++x) {
        Elem xa = (Elem)(x % s), xb = (Elem)((x / s) % s), xc = (Elem)(x / (s * s));
        names[x] = "[[" + base->name(xa) + "," + base->name(xb) + "],[0," + base->name(xc) + "]]";
        for (long y = 0; y < size; ++y) {
            Elem ya = (Elem)(y % s), yb = (Elem)((y / s) % s), yc = (Elem)(y / (s * s));
            add[x * size + y] = enc(base->add(xa, ya), base->add(xb, yb), base->add(xc, yc));
            mul[x * size + y] = enc(base->mul(xa, ya),
                                    base->add(base->mul(xa, yb), base->mul(xb, yc)),
                                    base->mul(xc, yc));
        }
    }
    std::string prov = "tri(" + base->provenance + ")";
    auto r = std::const_pointer_cast<FiniteRing>(
        build_ring((int)size, std::move(add), std::move(mul), 0,
                   enc(base->one, base->zero, base->one), std::move(names), prov, caps));
    r->ctor = FiniteRing::Ctor::triangular;
    r->ingredients = {base};
    return r;
}

// Truncated twisted power series S[X; t] / (X^N): coefficients from the
// base, X*r = t(r)*X, and X^N = 0.  The twist must be a unital ring
// endomorphism of the base.
inline RingPtr truncated_skew_series(const RingPtr& base, const std::vector<Elem>& twist,
                                     int N, const std::string& twist_label,
                                     const Caps& caps = default_caps()) {
    if (N < 1) throw InputError("trunc requires N >= 1");
    if (auto err = check_ring_hom(*base, *base, twist))
        throw InputError("trunc twist is not a ring endomorphism: " + *err);
    const long s = base->size;
    long size = 1;
    for (int i = 0; i < N; ++i) {
        size *= s;
        if (size > caps.global_cap) throw CapError("trunc result exceeds the global cap");
    }
    // twist iterates: tp[i][a] = t^i(a)
    std::vector<std::vector<Elem>> tp(N);
    tp[0].resize(s);
    for (long a = 0; a < s; ++a) tp[0][a] = (Elem)a;
    for (int i = 1; i < N; ++i) {
        tp[i].resize(s);
        for (long a = 0; a < s; ++a) tp[i][a] = twist[tp[i - 1][a]];
    }
    auto decode = [&](long id, std::vector<Elem>& c) {
        for (int i = 0; i < N; ++i) { c[i] = (Elem)(id % s); id /= s; }
    };
    auto encode = [&](const std::vector<Elem>& c) {
        long id = 0;
        for (int i = N; i-- > 0;) id = id * s + c[i];
        return (Elem)id;
    };
    auto coeff_name = [&](Elem a, int deg) -> std::string {
        std::string nm = base->name(a);
        std::string xs = deg == 1 ? "X" : "X^" + std::to_string(deg);
        if (deg == 0) return nm;
        if (nm == "1") return xs;
        bool plain = !nm.empty() && nm.find_first_not_of("0123456789") == std::string::npos;
        if (plain || nm.front() == '(') return nm + xs;
        return "(" + nm + ")" + xs;
    };
    std::vector<Elem> add(size * size), mul(size * size);
    std::vector<std::string> names(size);
    std::vector<Elem> ca(N), cb(N), cc(N);
    for (long a = 0; a < size; ++a) {
        decode(a, ca);
        std::string nm;
        for (int i = 0; i < N; ++i) {
            if (ca[i] == base->zero) continue;
            if (!nm.empty()) nm += "+";
            nm += coeff_name(ca[i], i);
        }
        names[a] = nm.empty() ? "0" : nm;
        for (long b = 0; b < size; ++b) {
            decode(b, cb);
            for (int i = 0; i < N; ++i) cc[i] = base->add(ca[i], cb[i]);
            add[a * size + b] = encode(cc);
            std::fill(cc.begin(), cc.end(), base->zero);
            for (int i = 0; i < N; ++i)
                for (int j = 0; i + j < N; ++j)
                    cc[i + j] = base->add(cc[i + j], base->mul(ca[i], tp[i][cb[j]]));
            mul[a * size + b] = encode(cc);
        }
    }
    std::vector<Elem> one_c(N, base->zero);
    one_c[0] = base->one;
    std::string prov = "trunc(" + base->provenance + ", " + twist_label + ", " + std::to_string(N) + ")";
    auto r = std::const_pointer_cast<FiniteRing>(
        build_ring((int)size, std::move(add), std::move(mul), 0, encode(one_c), std::move(names), prov, caps));
    r->ctor = FiniteRing::Ctor::trunc;
    r->ingredients = {base};
    r->params = {N};
    r->twist = twist;
    return r;
}

inline Elem trunc_coeff(const FiniteRing& tr, Elem x, int i) {
    long id = x;
    const long s = tr.ingredients[0]->size;
    for (int j = 0; j < i; ++j) id /= s;
    return (Elem)(id % s);
}

namespace detail {

// Build the ring on a sorted subset of a parent's elements, using the
// parent's operations.  `one_parent` names the multiplicative identity of
// the subset (it need not be the parent's 1, e.g. for corners).
inline RingPtr subring_on_subset(const RingPtr& parent, std::vector<Elem> subset,
                                 Elem one_parent, FiniteRing::Ctor ctor,
                                 const std::string& prov, const Caps& caps) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    const int m = (int)subset.size();
    auto idx = [&](Elem p) {
        return (Elem)(std::lower_bound(subset.begin(), subset.end(), p) - subset.begin());
    };
    std::vector<Elem> add((std::size_t)m * m), mul((std::size_t)m * m);
    std::vector<std::string> names(m);
    for (int a = 0; a < m; ++a) {
        names[a] = parent->name(subset[a]);
        for (int b = 0; b < m; ++b) {
            add[(std::size_t)a * m + b] = idx(parent->add(subset[a], subset[b]));
            mul[(std::size_t)a * m + b] = idx(parent->mul(subset[a], subset[b]));
        }
    }
    auto r = std::const_pointer_cast<FiniteRing>(
        build_ring(m, std::move(add), std::move(mul), idx(parent->zero), idx(one_parent),
                   std::move(names), prov, caps));
    r->ctor = ctor;
    r->ingredients = {parent};
    r->parent_elem = std::move(subset);
    return r;
}

} // namespace detail

// eRe for an idempotent e.  corner(R, 0) is the zero ring and is rejected by
// validation; a non-idempotent e is rejected up front.
inline RingPtr corner_ring(const RingPtr& parent, Elem e, const Caps& caps = default_caps()) {
    if (e >= parent->size) throw InputError("corner element id out of range");
    if (parent->mul(e, e) != e) throw InputError("corner requires an idempotent element");
    std::vector<Elem> subset;
    for (Elem x = 0; x < parent->size; ++x)
        subset.push_back(parent->mul(parent->mul(e, x), e));
    std::string prov = "corner(" + parent->provenance + ", #" + std::to_string(e) + ")";
    auto r = detail::subring_on_subset(parent, std::move(subset), e,
                                       FiniteRing::Ctor::corner, prov, caps);
    std::const_pointer_cast<FiniteRing>(r)->params = {(int)e};
    return r;
}

inline std::vector<Elem> center_elements(const FiniteRing& R) {
    std::vector<Elem> out;
    for (Elem x = 0; x < R.size; ++x) {
        bool central = true;
        for (Elem y = 0; y < R.size && central; ++y)
            if (R.mul(x, y) != R.mul(y, x)) central = false;
        if (central) out.push_back(x);
    }
    return out;
}

inline RingPtr center_ring(const RingPtr& parent, const Caps& caps = default_caps()) {
    std::string prov = "center(" + parent->provenance + ")";
    return detail::subring_on_subset(parent, center_elements(*parent), parent->one,
                                     FiniteRing::Ctor::center_sub, prov, caps);
}

} // namespace ringlab
