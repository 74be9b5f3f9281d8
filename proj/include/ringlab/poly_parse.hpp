#pragma once

// Tiny parser for polynomial text like "x^2+x+1" or "2x^3+5".  The grammar
// has no subtraction and no parentheses:
//
//   poly  := term ('+' term)*
//   term  := coeff | coeff? 'x' ('^' nat)?
//   coeff := nat
//
// Output is a dense coefficient vector indexed by degree (raw integers;
// callers reduce mod n or map through k*1 in a target ring).  Repeated
// degrees accumulate.  Errors raise InputError with the column position.

#include <cctype>
#include <string>
#include <vector>

#include "common.hpp"

namespace ringlab {

inline std::vector<long> parse_poly_text(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto fail = [&](const std::string& msg) -> void {
        throw InputError("polynomial parse error at column " + std::to_string(i + 1) +
                         ": " + msg + " in \"" + text + "\"");
    };
    auto nat = [&]() -> long {
        std::size_t start = i;
        long v = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) fail("number too large");
            ++i;
        }
        if (i == start) fail("expected a number");
        return v;
    };

    std::vector<long> coeffs;
    auto put = [&](std::size_t deg, long c) {
        if (deg > 64) fail("degree too large");
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] += c;
    };

    bool first = true;
    for (;;) {
        skip();
        if (!first) {
            if (i >= text.size()) break;
            if (text[i] != '+') fail("expected '+'");
            ++i;
            skip();
        }
        first = false;
        if (i >= text.size()) fail("expected a term");
        long c = 1;
        bool saw_coeff = false;
        if (std::isdigit((unsigned char)text[i])) {
            c = nat();
            saw_coeff = true;
        }
        skip();
        if (i < text.size() && text[i] == 'x') {
            ++i;
            skip();
            long d = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                d = nat();
            }
            put((std::size_t)d, c);
        } else {
            if (!saw_coeff) fail("expected a term");
            put(0, c);
        }
        skip();
        if (i >= text.size()) break;
    }
    if (coeffs.empty()) coeffs.push_back(0);
    return coeffs;
}

// Canonical rendering used for provenance text: descending-degree terms would
// also work, but the library prints constant-first ("1+x+2x^2") to match the
// element-name style of polynomial quotient rings.
inline std::string render_poly(const std::vector<long>& coeffs) {
    std::string out;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        long c = coeffs[d];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (d == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace ringlab
