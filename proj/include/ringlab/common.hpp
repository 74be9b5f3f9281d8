#pragma once

// Shared scalar types, capability limits and error carriers used across the
// library.  Everything operates on dense element ids (0..size-1), so the
// element type is a small unsigned integer; sizes are capped well below the
// uint16 range.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

using Elem = std::uint16_t;

// Hard and soft limits.  `global_cap` is an absolute refusal threshold for
// ring sizes; `full_validation_limit` switches axiom scans from exhaustive to
// sampled; the enumeration limits bound the backtracking searches.
struct Caps {
    int max_ring_size = 256;          // corpus / search ceiling
    int full_validation_limit = 512;  // exhaustive O(n^3) scans up to here
    int global_cap = 4096;            // never construct anything larger
    int enum_involutions_limit = 32;  // enumerate_involutions bails above
    int endo_limit = 64;              // endomorphisms bails above
    long sample_triples = 100000;     // sampled validation budget
};

inline const Caps& default_caps() {
    static Caps c;
    return c;
}

// One broken axiom instance.  `where` holds up to three element ids giving
// the first failing tuple for that axiom.
struct Violation {
    enum class Code {
        NotAGroup,       // additive structure broken (identity/inverse/assoc/comm)
        NotAssociative,  // multiplicative associativity
        NotDistributive, // either distributive law
        BadIdentity,     // 1*a != a or a*1 != a
        ZeroEqualsOne,   // degenerate ring rejected
        BadShape,        // table sizes / ids out of range
    };
    Code code;
    std::vector<Elem> where;
    std::string detail;
};

inline const char* violation_name(Violation::Code c) {
    switch (c) {
        case Violation::Code::NotAGroup: return "NotAGroup";
        case Violation::Code::NotAssociative: return "NotAssociative";
        case Violation::Code::NotDistributive: return "NotDistributive";
        case Violation::Code::BadIdentity: return "BadIdentity";
        case Violation::Code::ZeroEqualsOne: return "ZeroEqualsOne";
        case Violation::Code::BadShape: return "BadShape";
    }
    return "?";
}

class RinglabError : public std::runtime_error {
public:
    explicit RinglabError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a table set fails validation; carries the per-axiom findings.
class ValidationError : public RinglabError {
public:
    ValidationError(const std::string& msg, std::vector<Violation> v)
        : RinglabError(msg), violations(std::move(v)) {}
    std::vector<Violation> violations;
};

// Bad user input (DSL text, polynomial text, unknown names, arity).
class InputError : public RinglabError {
public:
    explicit InputError(const std::string& msg) : RinglabError(msg) {}
};

// A construction was refused because it would exceed a cap.
class CapError : public RinglabError {
public:
    explicit CapError(const std::string& msg) : RinglabError(msg) {}
};

} // namespace ringlab
