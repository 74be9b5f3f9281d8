#pragma once

// Command-line front end: census, verify, search, corpus.  Kept header-only
// like the rest of the library; tools/ringlab.cpp is a thin main() wrapper.

#include <algorithm>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "corpus.hpp"
#include "dsl.hpp"
#include "report.hpp"
#include "theorems.hpp"

namespace ringlab {

namespace cli_detail {

inline std::string now_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
#if defined(_WIN32)
    gmtime_s(&tm, &t);
#else
    gmtime_r(&t, &tm);
#endif
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::string caps_text(const Caps& caps) {
    std::ostringstream os;
    os << "size=" << caps.max_ring_size << " full=" << caps.full_validation_limit
       << " global=" << caps.global_cap << " inv=" << caps.enum_involutions_limit
       << " endo=" << caps.endo_limit << " samples=" << caps.sample_triples;
    return os.str();
}

// "size=64,inv=8" -> caps override.  Unknown keys are input errors.
inline Caps parse_caps(const std::string& text, Caps caps) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("bad caps item '" + item + "' (expected key=value)");
        std::string key = item.substr(0, eq);
        long value = 0;
        try {
            value = std::stol(item.substr(eq + 1));
        } catch (...) {
            throw InputError("bad caps value in '" + item + "'");
        }
        if (value < 0) throw InputError("caps value must be non-negative in '" + item + "'");
        if (key == "size") caps.max_ring_size = (int)value;
        else if (key == "full") caps.full_validation_limit = (int)value;
        else if (key == "global") caps.global_cap = (int)value;
        else if (key == "inv") caps.enum_involutions_limit = (int)value;
        else if (key == "endo") caps.endo_limit = (int)value;
        else if (key == "samples") caps.sample_triples = value;
        else
            throw InputError("unknown caps key '" + key +
                             "' (expected size, full, global, inv, endo, samples)");
    }
    return caps;
}

inline std::string elem_text(const FiniteRing& R, Elem x) {
    return R.name(x) + " (#" + std::to_string(x) + ")";
}

inline std::string pair_text(const FiniteRing& R, const char* k1, Elem a, const char* k2,
                             Elem b) {
    std::ostringstream os;
    os << k1 << "=" << elem_text(R, a) << ", " << k2 << "=" << elem_text(R, b);
    return os.str();
}

// Positional / option splitter.  Options take one value except --corpus.
struct ParsedArgs {
    std::vector<std::string> positional;
    std::string format = "human";
    std::string caps;
    std::string element;
    std::string star;
    std::string g;
    bool use_corpus = false;
};

inline ParsedArgs split_args(const std::vector<std::string>& args, std::size_t from) {
    ParsedArgs out;
    auto need_value = [&](std::size_t& i, const std::string& opt) -> std::string {
        if (i + 1 >= args.size()) throw InputError("missing value for " + opt);
        return args[++i];
    };
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--corpus") out.use_corpus = true;
        else if (a == "--format") out.format = need_value(i, a);
        else if (a == "--caps") out.caps = need_value(i, a);
        else if (a == "--element") out.element = need_value(i, a);
        else if (a == "--star") out.star = need_value(i, a);
        else if (a == "--g") out.g = need_value(i, a);
        else if (!a.empty() && a[0] == '-' && a != "-")
            throw InputError("unknown option '" + a + "'");
        else
            out.positional.push_back(a);
    }
    if (out.format != "human" && out.format != "machine")
        throw InputError("unknown format '" + out.format + "' (expected human or machine)");
    return out;
}

inline void emit(const ReportDocument& doc, const std::string& format, std::ostream& os) {
    os << (format == "machine" ? render_machine(doc) : render_human(doc));
}

// Resolve an element argument: #id, exact element name, or bare decimal id.
inline Elem resolve_element(const FiniteRing& R, const std::string& text) {
    if (!text.empty() && text[0] == '#') {
        std::string t = text.substr(1);
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad element reference '" + text + "'");
        unsigned long v = std::stoul(t);
        if (v >= (unsigned long)R.size)
            throw InputError("element id " + t + " out of range for " + R.provenance);
        return (Elem)v;
    }
    for (Elem x = 0; (int)x < R.size; ++x)
        if (R.name(x) == text) return x;
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
        unsigned long v = std::stoul(text);
        if (v < (unsigned long)R.size) return (Elem)v;
    }
    throw InputError("no element named '" + text + "' in " + R.provenance);
}

// ---- census ---------------------------------------------------------------

inline void census_rows(ReportDocument& doc, const Analysis& an, const std::string& ring_desc) {
    const Census& c = an.census;
    auto count = [&](const char* what, int n) {
        if (n < 0) return;
        doc.rows.push_back({"count", ring_desc, what, std::to_string(n), "-", 0});
    };
    count("|R|", c.size);
    count("|U|", c.n_unit);
    count("|Idem|", c.n_idem);
    count("|Reg|", c.n_reg);
    count("|Nil|", c.n_nil);
    count("|C|", c.n_central);
    count("|J|", c.n_jac);
    count("|P|", c.n_proj);
    count("|roots|", c.n_root);

    auto pred = [&](const char* what, bool v) {
        doc.rows.push_back({"census", ring_desc, what, v ? "true" : "false", "-", 0});
    };
    pred("commutative", c.commutative);
    pred("abelian", c.abelian);
    pred("boolean", c.boolean_ring);
    pred("no_zero_divisors", c.no_zero_divisors);
    pred("two_invertible", c.two_invertible);
    pred("trivial_idempotents_only", c.trivial_idempotents_only);

    auto flag = [&](const char* what, const Census::Flag& f) {
        std::string w = f.value ? "-" : "x=" + elem_text(*an.ring, f.witness);
        doc.rows.push_back({"census", ring_desc, what, f.value ? "true" : "false", w, 0});
    };
    flag("is_clean", c.is_clean);
    flag("is_weakly_clean", c.is_weakly_clean);
    flag("is_r_clean", c.is_r_clean);
    flag("is_weakly_r_clean", c.is_weakly_r_clean);
    flag("is_exchange", c.is_exchange);
    flag("is_weakly_exchange", c.is_weakly_exchange);
    flag("is_strongly_clean", c.is_strongly_clean);
    auto opt_flag = [&](const char* what, const std::optional<Census::Flag>& f) {
        if (f) flag(what, *f);
    };
    opt_flag("is_star_clean", c.is_star_clean);
    opt_flag("is_weakly_star_clean", c.is_weakly_star_clean);
    opt_flag("is_star_r_clean", c.is_star_r_clean);
    opt_flag("is_g_clean", c.is_g_clean);
    opt_flag("is_g_r_clean", c.is_g_r_clean);
    opt_flag("is_weakly_g_r_clean", c.is_weakly_g_r_clean);
}

inline void element_rows(ReportDocument& doc, const Analysis& an, Elem x,
                         const std::string& ring_desc) {
    const FiniteRing& R = *an.ring;
    const ElementProfile& p = an.prof[x];
    auto row = [&](const char* what, bool v, const std::string& wit) {
        doc.rows.push_back({"element", ring_desc, what, v ? "true" : "false",
                            v && !wit.empty() ? wit : "-", 0});
    };
    auto pair2 = [&](const char* k1, Elem a, const char* k2, Elem b, bool t2 = false) {
        std::string t = pair_text(R, k1, a, k2, b);
        if (t2) t += " (type 2)";
        return t;
    };

    doc.rows.push_back({"element", ring_desc, "element", elem_text(R, x), "-", 0});
    row("unit", p.unit, p.unit ? "inverse=" + elem_text(R, p.inverse) : "");
    row("idempotent", p.idempotent, "");
    row("regular", p.regular, p.regular ? "y=" + elem_text(R, p.reg_y) : "");
    row("nilpotent", p.nilpotent, p.nilpotent ? "k=" + std::to_string(p.nil_index) : "");
    row("central", p.central, "");
    row("in_jacobson_radical", p.in_jacobson, "");

    auto decomp = [&](const char* what, const std::optional<Decomp>& w, const char* k1,
                      const char* k2) {
        row(what, w.has_value(), w ? pair2(k1, w->part1, k2, w->part2) : "");
    };
    auto weak_pair = [&](const std::optional<Decomp>& t1, const std::optional<Decomp>& t2,
                         const char* k1, const char* k2) -> std::string {
        if (t1) return pair2(k1, t1->part1, k2, t1->part2);
        if (t2) return pair2(k1, t2->part1, k2, t2->part2, true);
        return "";
    };
    decomp("clean", p.clean_w, "u", "e");
    row("weakly_clean", p.weakly_clean(), weak_pair(p.clean_w, p.weakly_clean_t2_w, "u", "e"));
    decomp("strongly_clean", p.strongly_clean_w, "u", "e");
    decomp("r_clean", p.r_clean_w, "r", "e");
    row("weakly_r_clean", p.weakly_r_clean(),
        weak_pair(p.r_clean_w, p.weakly_r_clean_t2_w, "r", "e"));

    auto exch = [&](const char* what, const std::optional<ExchangeWitness>& w) {
        std::string t;
        if (w)
            t = "e=" + elem_text(R, w->e) + " via " + (w->branch == 0 ? "(1-x)R" : "(1+x)R");
        row(what, w.has_value(), t);
    };
    exch("exchange", p.exchange_w);
    exch("weakly_exchange", p.weakly_exchange_w);

    if (an.star) {
        row("projection", p.projection, "");
        decomp("star_clean", p.star_clean_w, "u", "p");
        row("weakly_star_clean", p.weakly_star_clean(),
            weak_pair(p.star_clean_w, p.weakly_star_clean_t2_w, "u", "p"));
        decomp("strongly_star_clean", p.strongly_star_clean_w, "u", "p");
        decomp("star_r_clean", p.star_r_clean_w, "r", "p");
        decomp("unit_plus_selfadjoint_sqrt1", p.sasr1_w, "u", "s");
        decomp("two_projections_plus_unit", p.two_p_plus_one_w, "u", "p");
    }
    if (an.poly) {
        row("poly_root", p.g_root, "");
        decomp("g_clean", p.g_clean_w, "u", "s");
        decomp("strongly_g_clean", p.strongly_g_clean_w, "u", "s");
        decomp("g_r_clean", p.g_r_clean_w, "r", "s");
        row("weakly_g_r_clean", p.weakly_g_r_clean(),
            weak_pair(p.g_r_clean_w, p.weakly_g_r_clean_t2_w, "r", "s"));
    }
}

inline int cmd_census(const ParsedArgs& pa, const Caps& caps, std::ostream& out) {
    if (pa.positional.size() != 1)
        throw InputError("census needs exactly one ring spec");
    ParsedSpec ps = parse_ring_spec(pa.positional[0], caps);
    std::optional<Involution> star = ps.star;
    std::string desc = ps.canonical;
    if (!pa.star.empty()) {
        if (star) throw InputError("spec already carries an involution; drop --star");
        star = resolve_involution(ps.ring, pa.star, caps);
        desc = "star(" + ps.ring->provenance + ", " + star->label + ")";
    }
    std::optional<CentralPolynomial> poly;
    if (!pa.g.empty()) {
        std::vector<long> ic = parse_poly_text(pa.g);
        poly = make_int_poly(ps.ring, ic, render_poly(ic));
    }

    Analysis an = analyze(ps.ring, star ? &*star : nullptr, poly ? &*poly : nullptr);

    ReportDocument doc;
    doc.command = "census";
    doc.spec = desc + (poly ? " g=" + poly->text : "");
    doc.caps_text = caps_text(caps);
    doc.timestamp = now_utc();
    if (pa.element.empty()) {
        census_rows(doc, an, desc);
    } else {
        Elem x = resolve_element(*ps.ring, pa.element);
        element_rows(doc, an, x, desc);
    }
    emit(doc, pa.format, out);
    return 0;
}

// ---- verify ---------------------------------------------------------------

inline std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> ids;
    if (text == "all") return ids;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string id = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
        if (!id.empty()) ids.push_back(id);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (ids.empty()) throw InputError("empty check list");
    for (const auto& id : ids) check_def(id);  // throws on unknown ids
    return ids;
}

inline CorpusEntry entry_from_spec(const std::string& text, const Caps& caps) {
    ParsedSpec ps = parse_ring_spec(text, caps);
    CorpusEntry e;
    e.ring = ps.ring;
    e.tags = {"spec"};
    if (ps.star) {
        // An explicit star() spec pins the involution; polynomials still get
        // the standard trio so g-family checks stay runnable.
        e.involutions.push_back(*ps.star);
        e.polynomials.push_back(make_int_poly(e.ring, {0, -1, 1}, "x^2-x"));
        e.polynomials.push_back(make_int_poly(e.ring, {0, 1, 1}, "x^2+x"));
        e.polynomials.push_back(make_int_poly(e.ring, {0, -1, 0, 1}, "x^3-x"));
    } else {
        detail::attach(e, caps);
    }
    return e;
}

inline int cmd_verify(const ParsedArgs& pa, const Caps& caps, std::ostream& out) {
    if (pa.positional.empty())
        throw InputError("verify needs a check list ('all' or comma-separated ids)");
    std::vector<std::string> ids = split_ids(pa.positional[0]);

    std::vector<CorpusEntry> corpus;
    if (pa.use_corpus) {
        if (pa.positional.size() > 1)
            throw InputError("give either ring specs or --corpus, not both");
        corpus = corpus_generate(caps);
    } else {
        if (pa.positional.size() < 2)
            throw InputError("verify needs ring specs or --corpus");
        for (std::size_t i = 1; i < pa.positional.size(); ++i)
            corpus.push_back(entry_from_spec(pa.positional[i], caps));
    }

    std::vector<CheckReport> reports = run_suite(corpus, caps, ids);
    SuiteSummary sum = summarize(reports);

    ReportDocument doc;
    doc.command = "verify";
    doc.spec = pa.use_corpus ? "--corpus" : pa.positional[1];
    doc.caps_text = caps_text(caps);
    doc.timestamp = now_utc();
    for (const auto& r : reports)
        doc.rows.push_back({"check", r.inputs, r.id, check_status_name(r.status), r.witness,
                            r.nanos});
    if (reports.empty())
        doc.rows.push_back({"note", "-", "-", "-", "no applicable instances", 0});
    doc.rows.push_back({"stat", "-", "verified", std::to_string(sum.verified), "-", 0});
    doc.rows.push_back(
        {"stat", "-", "counterexamples", std::to_string(sum.counterexamples), "-", 0});
    doc.rows.push_back(
        {"stat", "-", "not_applicable", std::to_string(sum.not_applicable), "-", 0});
    emit(doc, pa.format, out);
    return sum.counterexamples > 0 ? 1 : 0;
}

// ---- search ---------------------------------------------------------------

inline int cmd_search(const ParsedArgs& pa, const Caps& caps, std::ostream& out) {
    if (pa.positional.size() != 1) throw InputError("search needs exactly one query");
    WitnessQuery q = parse_query(pa.positional[0]);
    std::vector<CorpusEntry> corpus = corpus_generate(caps);
    SearchResult res = find_witness(q, corpus);

    ReportDocument doc;
    doc.command = "search";
    doc.spec = q.canonical();
    doc.caps_text = caps_text(caps);
    doc.timestamp = now_utc();
    for (const auto& h : res.hits) {
        std::string ring = h.ring_desc;
        if (!h.poly_text.empty()) ring += " g=" + h.poly_text;
        std::string wit = h.elem ? h.elem_name + " (#" + std::to_string(*h.elem) + ")" : "-";
        doc.rows.push_back({"witness", ring, q.canonical(), "found", wit, 0});
    }
    if (res.hits.empty())
        doc.rows.push_back({"note", "-", q.canonical(), "-", "no witness in corpus", 0});
    doc.rows.push_back(
        {"stat", "-", "entries_scanned", std::to_string(res.entries_scanned), "-", 0});
    doc.rows.push_back(
        {"stat", "-", "combos_scanned", std::to_string(res.combos_scanned), "-", 0});
    doc.rows.push_back(
        {"stat", "-", "elements_scanned", std::to_string(res.elements_scanned), "-", 0});
    doc.rows.push_back({"stat", "-", "witnesses_found", std::to_string(res.hits.size()), "-", 0});
    emit(doc, pa.format, out);
    return 0;
}

// ---- corpus ---------------------------------------------------------------

inline int cmd_corpus(const ParsedArgs& pa, const Caps& caps, std::ostream& out) {
    if (pa.positional.size() != 1 || pa.positional[0] != "list")
        throw InputError("usage: corpus list");
    std::vector<CorpusEntry> corpus = corpus_generate(caps);
    ReportDocument doc;
    doc.command = "corpus";
    doc.spec = "list";
    doc.caps_text = caps_text(caps);
    doc.timestamp = now_utc();
    for (const auto& e : corpus) {
        std::ostringstream wit;
        wit << "tags=";
        for (std::size_t i = 0; i < e.tags.size(); ++i) wit << (i ? "," : "") << e.tags[i];
        wit << "; involutions=";
        for (std::size_t i = 0; i < e.involutions.size(); ++i)
            wit << (i ? "," : "") << e.involutions[i].label;
        wit << "; polys=";
        for (std::size_t i = 0; i < e.polynomials.size(); ++i)
            wit << (i ? "," : "") << e.polynomials[i].text;
        doc.rows.push_back({"corpus", e.ring->provenance, "entry",
                            std::to_string(e.ring->size), wit.str(), 0});
    }
    doc.rows.push_back({"stat", "-", "entries", std::to_string(corpus.size()), "-", 0});
    emit(doc, pa.format, out);
    return 0;
}

inline const char* usage_text() {
    return "usage:\n"
           "  ringlab census <spec> [--element <name|#id>] [--star <inv>] [--g <poly>]\n"
           "  ringlab verify <all|C01,C02,...> [<spec>...] [--corpus]\n"
           "  ringlab search <query>\n"
           "  ringlab corpus list\n"
           "common options: --format human|machine, --caps k=v[,k=v...]\n"
           "caps keys: size, full, global, inv, endo, samples\n";
}

} // namespace cli_detail

// Entry point used by tools/ringlab.cpp and by the tests (no process exit,
// just a return code: 0 ok, 1 counterexample found, 2 input error).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    try {
        if (args.empty() || args[0] == "help" || args[0] == "--help") {
            out << usage_text();
            return args.empty() ? 2 : 0;
        }
        const std::string& cmd = args[0];
        ParsedArgs pa = split_args(args, 1);
        Caps caps = parse_caps(pa.caps, default_caps());
        if (cmd == "census") return cmd_census(pa, caps, out);
        if (cmd == "verify") return cmd_verify(pa, caps, out);
        if (cmd == "search") return cmd_search(pa, caps, out);
        if (cmd == "corpus") return cmd_corpus(pa, caps, out);
        throw InputError("unknown command '" + cmd + "'");
    } catch (const RinglabError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ringlab
