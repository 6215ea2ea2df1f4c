#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "clab/catalog.hpp"
#include "clab/io.hpp"

using namespace clab;

namespace {

struct CmdResult {
    int code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("parse_rational") {
    CHECK(parse_rational("2/5") == Rat(2, 5));
    CHECK(parse_rational("-3") == Rat(-3));
    CHECK(parse_rational("4/6") == Rat(2, 3));
    CHECK(rat_str(Rat(-4, 3)) == "-4/3");
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("parse_laurent round trips") {
    for (const char* s : {"2 - 5*t + 2*t^2", "t", "0", "-1 + t^-1",
                          "1/2 - t^3"}) {
        Laurent p = parse_laurent(s);
        CHECK(parse_laurent(p.str()) == p);
    }
    CHECK(parse_laurent("t^2-t+1") ==
          Laurent::from_coeffs(0, {Rat(1), Rat(-1), Rat(1)}));
    CHECK_THROWS_AS(parse_laurent("t^"), ParseError);
    CHECK_THROWS_AS(parse_laurent("2x"), ParseError);
}

TEST_CASE("seifert text format") {
    SeifertForm gl = parse_seifert_text("seifert 2\n0 1\n2 0\n");
    CHECK(gl == SeifertForm(IntMat::from_rows({{0, 1}, {2, 0}})));

    // canonical emit/parse round trip is byte identical
    std::string canon = emit_seifert_text(gl);
    CHECK(emit_seifert_text(parse_seifert_text(canon)) == canon);

    // comments and blank lines are tolerated
    CHECK(parse_seifert_text("# gl knot\nseifert 2\n\n0 1\n2 0\n") == gl);

    CHECK_THROWS_AS(parse_seifert_text("seifert 3\n1 2 3\n4 5 6\n7 8 9\n"),
                    ParseError);
    // degenerate antisymmetrization is named in the diagnostic
    try {
        parse_seifert_text("seifert 2\n0 0\n0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("det") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_seifert_text("seifert 2\n0 1\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_seifert_text("hello\n"), ParseError);
}

TEST_CASE("descriptor json round trips") {
    for (const char* name : {"unknot", "gl", "thm15", "thm10"}) {
        const CatalogEntry* e = catalog_find(name);
        REQUIRE(e != nullptr);
        std::string canon = emit_descriptor_json(e->descriptor);
        std::string again =
            emit_descriptor_json(parse_descriptor_json(canon));
        CHECK(canon == again);
    }

    KnotDescriptor d = parse_descriptor_json(R"({
        "kind": "infection",
        "seed": {"kind": "leaf", "matrix": [[0,1],[2,0]]},
        "arms": [{"axis": {"class": ["0", "1"], "depth": 1,
                           "disjoint": true, "name": "eta2"},
                  "companion": {"kind": "steps",
                                "steps": [["2/5", 2], ["3/5", 0]]}}]
    })");
    CHECK(d.kind == KnotDescriptor::Kind::infection);
    CHECK(effective_seifert(d) ==
          SeifertForm(IntMat::from_rows({{0, 1}, {2, 0}})));
    RhoValue rho = rho_z_knot(d.children.at(1));
    CHECK(rho.exact == Rat(2, 5));
    CHECK(double_one_five_obstruction(d) == Dof::obstructed);

    CHECK_THROWS_AS(parse_descriptor_json("{\"kind\": \"wat\"}"), ParseError);
    CHECK_THROWS_AS(parse_descriptor_json("not json"), ParseError);
}

TEST_CASE("report serialization carries every field") {
    ObstructionReport r = classify(catalog_find("thm15")->descriptor, 2);
    std::string text = report_text(r);
    std::string j = report_json(r);
    for (const char* key :
         {"arf", "alg_slice", "alg_doubly_slice", "selfann_count",
          "gilmer_livingston", "double_one_five"}) {
        CHECK(text.find(key) != std::string::npos);
        CHECK(j.find(key) != std::string::npos);
    }
    CHECK(j.find("obstructed") != std::string::npos);
}

TEST_CASE("catalog entries and self-test") {
    CHECK(catalog().size() == 6);
    CHECK(catalog_find("gl") != nullptr);
    CHECK(catalog_find("nope") == nullptr);
}

TEST_CASE("cli subcommands") {
    CmdResult inv = run_cli("invariants --knot gl");
    CHECK(inv.code == 0);
    CHECK(inv.out.find("2 - 5*t + 2*t^2") != std::string::npos);
    CHECK(inv.out.find("arf: 0") != std::string::npos);

    CmdResult fam = run_cli("family --a 1 --c 3 --n 3 --count");
    CHECK(fam.code == 0);
    CHECK(fam.out == "9\n");

    CmdResult cls = run_cli("classify --knot thm15 --bound 2");
    CHECK(cls.code == 0);
    CHECK(cls.out.find("double_one_five: obstructed") != std::string::npos);

    CmdResult rho = run_cli("rho --knot trefoil_right");
    CHECK(rho.code == 0);
    CHECK(rho.out.find("-4/3") != std::string::npos);

    CmdResult cat = run_cli("catalog --json");
    CHECK(cat.code == 0);
    CHECK(cat.out.find("seed_k") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    // parse errors
    CHECK(run_cli("invariants --knot does_not_exist").code == 1);
    CHECK(run_cli("nonsense").code == 1);
    // inconclusive search / unsupported shape
    CHECK(run_cli("metabolizer --knot trefoil_right --bound 2").code == 2);
    CHECK(run_cli("rho --knot thm15").code == 2);
    // success
    CHECK(run_cli("metabolizer --knot gl --bound 1").code == 0);
}

TEST_CASE("cli reads seifert files") {
    std::string path = "/tmp/clab_gl_test.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f);
        fputs("seifert 2\n0 1\n2 0\n", f);
        fclose(f);
    }
    CmdResult inv = run_cli("invariants --knot " + path);
    CHECK(inv.code == 0);
    CHECK(inv.out.find("2 - 5*t + 2*t^2") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run_cli("invariants --knot /tmp/clab_missing.txt").code == 1);
}
