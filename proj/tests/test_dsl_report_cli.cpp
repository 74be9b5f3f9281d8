#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <ringlab/cli.hpp>
#include <ringlab/dsl.hpp>
#include <ringlab/report.hpp>

using namespace ringlab;

TEST_CASE("ring specs parse and canonicalize") {
    auto ps = parse_ring_spec("Zn(6)");
    CHECK(ps.ring->size == 6);
    CHECK(!ps.star.has_value());
    CHECK(ps.canonical == "Zn(6)");

    auto st = parse_ring_spec("star(product(Zn(2), Zn(2)), swap)");
    REQUIRE(st.star.has_value());
    CHECK(st.star->label == "swap");
    CHECK(st.canonical == "star(product(Zn(2), Zn(2)), swap)");

    // polynomial literals may be quoted or bare; canonical text is bare
    CHECK(parse_ring_spec("polyq(2, \"x^2+x+1\")").canonical == "polyq(2, 1+x+x^2)");
    CHECK(parse_ring_spec("polyq(2, x^2+x+1)").canonical == "polyq(2, 1+x+x^2)");

    for (const char* spec :
         {"Zn(6)", "polyq(2, 1+x+x^2)", "product(Zn(2), Zn(4))", "M(Zn(2), 2)", "tri(Zn(3))",
          "trunc(Zn(2), id, 2)", "trunc(polyq(2, 1+x+x^2), frobenius, 2)",
          "corner(M(Zn(2), 2), #1)", "quot(Zn(6), #3)", "center(M(Zn(2), 2))",
          "star(product(Zn(2), Zn(2)), swap)", "star(M(Zn(2), 2), transpose)"}) {
        INFO(spec);
        auto p = parse_ring_spec(spec);
        CHECK(p.canonical == spec);  // canonical strings reparse to themselves
    }
}

TEST_CASE("element references accept ids and names") {
    auto byid = parse_ring_spec("corner(M(Zn(2), 2), #1)");
    auto byname = parse_ring_spec("corner(M(Zn(2), 2), \"[[1,0],[0,0]]\")");
    CHECK(byid.canonical == byname.canonical);
    auto q = parse_ring_spec("quot(Zn(6), 3)");
    CHECK(q.ring->size == 3);
}

TEST_CASE("spec parse failures carry useful messages") {
    CHECK_THROWS_AS(parse_ring_spec("Frobnicate(3)"), UnknownConstructorError);
    CHECK_THROWS_AS(parse_ring_spec("product(Zn(2))"), ArityError);
    CHECK_THROWS_AS(parse_ring_spec("star(star(Zn(4), id), id)"), ParseError);
    try {
        parse_ring_spec("star(star(Zn(4), id), id)");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("outermost") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_ring_spec("Zn(6) trailing"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Zn(6"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("corner(M(Zn(2), 2), #99)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("star(Zn(6), swap)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("trunc(Zn(6), frobenius, 2)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec(""), ParseError);
    // all of these are input errors for a caller that only knows the base type
    CHECK_THROWS_AS(parse_ring_spec("Frobnicate(3)"), InputError);
}

TEST_CASE("resolve_involution covers the named forms") {
    auto f4 = make_poly_quotient(2, "x^2+x+1");
    CHECK(resolve_involution(f4, "id").is_identity());
    CHECK(resolve_involution(f4, "frobenius").tab == std::vector<Elem>{0, 1, 3, 2});
    CHECK(resolve_involution(f4, "enumerated:0").is_identity());
    CHECK(resolve_involution(f4, "enumerated:1").tab == std::vector<Elem>{0, 1, 3, 2});
    CHECK_THROWS_AS(resolve_involution(f4, "enumerated:9"), ParseError);
    CHECK_THROWS_AS(resolve_involution(f4, "swap"), ParseError);
    CHECK_THROWS_AS(resolve_involution(f4, "sideways"), ParseError);
}

TEST_CASE("machine report round-trips") {
    ReportDocument doc;
    doc.command = "census";
    doc.spec = "Zn(6)";
    doc.caps_text = "size=256 full=512 global=4096 inv=32 endo=64 samples=100000";
    doc.timestamp = "2026-01-01T00:00:00Z";
    doc.rows.push_back({"count", "Zn(6)", "|U|", "2", "-", 0});
    doc.rows.push_back({"census", "Zn(6)", "is_clean", "true", "-", 12345});
    doc.rows.push_back({"check", "Zn(6) mod {0,3}", "C10", "verified", "-", 77});

    std::string text = render_machine(doc);
    auto back = parse_machine(text);
    CHECK(back.command == doc.command);
    CHECK(back.spec == doc.spec);
    CHECK(back.caps_text == doc.caps_text);
    CHECK(back.timestamp == doc.timestamp);
    REQUIRE(back.rows.size() == doc.rows.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        CHECK(back.rows[i].kind == doc.rows[i].kind);
        CHECK(back.rows[i].ring == doc.rows[i].ring);
        CHECK(back.rows[i].flag_or_check == doc.rows[i].flag_or_check);
        CHECK(back.rows[i].status == doc.rows[i].status);
        CHECK(back.rows[i].witness == doc.rows[i].witness);
        CHECK(back.rows[i].nanos == doc.rows[i].nanos);
    }
    CHECK(render_machine(back) == text);  // emit . parse . emit is stable

    // every line has exactly six tab-separated fields
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        CHECK(std::count(line.begin(), line.end(), '\t') == 5);
    }
}

TEST_CASE("machine fields are sanitized") {
    ReportDocument doc;
    doc.command = "census";
    doc.rows.push_back({"note", "R", "f", "ok", "line one\nline\ttwo", 0});
    auto text = render_machine(doc);
    CHECK(text.find("line one line two") != std::string::npos);
    auto back = parse_machine(text);
    REQUIRE(back.rows.size() == 1);
    CHECK(back.rows[0].witness == "line one line two");
    CHECK_THROWS_AS(parse_machine("only\tthree\tfields\n"), InputError);
    CHECK_THROWS_AS(parse_machine("a\tb\tc\td\te\tnotanumber\n"), InputError);
}

TEST_CASE("human report formats a header and aligned table") {
    ReportDocument doc;
    doc.command = "census";
    doc.spec = "Zn(4)";
    doc.caps_text = "size=8";
    doc.rows.push_back({"count", "Zn(4)", "|U|", "2", "-", 0});
    auto text = render_human(doc);
    CHECK(text.find("# census  [Zn(4)]") == 0);
    CHECK(text.find("# caps: size=8") != std::string::npos);
    CHECK(text.find("kind") != std::string::npos);
    CHECK(text.find("----") != std::string::npos);
}

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli census command") {
    auto r = cli({"census", "Zn(6)", "--format", "machine"});
    CHECK(r.code == 0);
    CHECK(r.out.find("meta\t-\tcommand\t-\tcensus\t0") == 0);
    CHECK(r.out.find("count\tZn(6)\t|U|\t2\t-\t0") != std::string::npos);
    CHECK(r.out.find("census\tZn(6)\tis_clean\ttrue\t-\t0") != std::string::npos);
    CHECK(r.err.empty());

    auto elem = cli({"census", "Zn(6)", "--element", "2", "--format", "machine"});
    CHECK(elem.code == 0);
    CHECK(elem.out.find("element\tZn(6)\tclean\ttrue\tu=1 (#1), e=1 (#1)\t0") !=
          std::string::npos);

    auto starred = cli({"census", "star(product(Zn(2), Zn(2)), swap)", "--format", "machine"});
    CHECK(starred.code == 0);
    CHECK(starred.out.find("is_weakly_star_clean\tfalse\tx=(1,0) (#1)") != std::string::npos);

    auto viastar = cli({"census", "product(Zn(2), Zn(2))", "--star", "swap",
                        "--format", "machine"});
    CHECK(viastar.out.find("is_weakly_star_clean\tfalse") != std::string::npos);

    // the polynomial grammar is additive; x^2 - x over Z6 is written x^2+5x
    auto withg = cli({"census", "Zn(6)", "--g", "x^2+5x", "--format", "machine"});
    CHECK(withg.code == 0);
    CHECK(withg.out.find("count\tZn(6)\t|roots|\t4\t-\t0") != std::string::npos);
    CHECK(withg.out.find("is_g_r_clean\ttrue") != std::string::npos);
}

TEST_CASE("cli error paths exit 2") {
    CHECK(cli({"census", "Zn(1)"}).code == 2);
    CHECK(cli({"census", "Nope(3)"}).code == 2);
    CHECK(cli({"census"}).code == 2);
    CHECK(cli({"blorp"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"census", "Zn(6)", "--format", "yaml"}).code == 2);
    CHECK(cli({"census", "Zn(6)", "--caps", "bogus"}).code == 2);
    CHECK(cli({"census", "Zn(6)", "--caps", "warp=9"}).code == 2);
    CHECK(cli({"census", "Zn(6)", "--element", "banana"}).code == 2);
    CHECK(cli({"census", "star(Zn(4), id)", "--star", "id"}).code == 2);
    CHECK(cli({"verify", "C99", "--corpus"}).code == 2);
    CHECK(cli({"verify", "all"}).code == 2);  // no rings given
    CHECK(cli({"search", "!no_such"}).code == 2);
    CHECK(cli({"corpus", "dance"}).code == 2);
    auto r = cli({"census", "Nope(3)"});
    CHECK(r.err.find("error:") == 0);
    CHECK(r.out.empty());
}

TEST_CASE("cli verify command") {
    auto ok = cli({"verify", "C20", "star(product(Zn(2), Zn(2)), swap)", "--format", "machine"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("check\tstar(product(Zn(2), Zn(2)), swap)\tC20\tverified") !=
          std::string::npos);
    CHECK(ok.out.find("stat\t-\tcounterexamples\t0\t-\t0") != std::string::npos);

    auto multi = cli({"verify", "C03,C12", "Zn(7)", "--format", "machine"});
    CHECK(multi.code == 0);
    CHECK(multi.out.find("\tC03\tverified") != std::string::npos);
    CHECK(multi.out.find("\tC12\tverified") != std::string::npos);

    // no applicable instances: product checks on a non-product ring
    auto none = cli({"verify", "C02", "Zn(6)", "--format", "machine"});
    CHECK(none.code == 0);
    CHECK(none.out.find("note\t-\t-\t-\tno applicable instances\t0") != std::string::npos);
}

TEST_CASE("cli search command") {
    auto hit = cli({"search", "is_weakly_clean & !is_weakly_star_clean", "--format", "machine"});
    CHECK(hit.code == 0);
    CHECK(hit.out.find("witness\tstar(product(Zn(2), Zn(2)), swap)\t") != std::string::npos);
    CHECK(hit.out.find("stat\t-\twitnesses_found\t") != std::string::npos);

    auto none = cli({"search", "!is_clean", "--format", "machine"});
    CHECK(none.code == 0);
    CHECK(none.out.find("no witness in corpus") != std::string::npos);
}

TEST_CASE("cli corpus list respects caps") {
    auto all = cli({"corpus", "list", "--format", "machine"});
    CHECK(all.code == 0);
    CHECK(all.out.find("corpus\tZn(2)\tentry\t2\t") != std::string::npos);
    auto small = cli({"corpus", "list", "--caps", "size=8", "--format", "machine"});
    CHECK(small.code == 0);
    CHECK(small.out.find("Zn(9)") == std::string::npos);
    CHECK(small.out.find("meta\t-\tcaps\t-\tsize=8 ") != std::string::npos);
}

TEST_CASE("cli help") {
    auto r = cli({"help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("usage:") == 0);
}
