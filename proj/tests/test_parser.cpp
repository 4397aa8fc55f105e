#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cdsem/ast.hpp"
#include "cdsem/parser.hpp"
#include "util.hpp"

using namespace cdsem;
namespace tu = cdsem::testutil;

TEST_CASE("three-class inheritance chain parses in source order") {
    Diagram d = parse_diagram(tu::kAbcSource);
    CHECK(d.name == tu::id("ABC"));
    CHECK(d.invariants.empty());
    REQUIRE(d.elements.size() == 3);
    CHECK(std::get<ClassDecl>(d.elements[0]) == ClassDecl{tu::id("A"), {}, {}});
    CHECK(std::get<ClassDecl>(d.elements[1]) == ClassDecl{tu::id("B"), {tu::id("A")}, {}});
    CHECK(std::get<ClassDecl>(d.elements[2]) == ClassDecl{tu::id("C"), {tu::id("B")}, {}});
}

TEST_CASE("empty body") {
    Diagram d = parse_diagram("classdiagram X { }");
    CHECK(d.name == tu::id("X"));
    CHECK(d.invariants.empty());
    CHECK(d.elements.empty());
}

TEST_CASE("classes and association in order") {
    Diagram d = parse_diagram("classdiagram Y { class A; class B; association A -- B; }");
    REQUIRE(d.elements.size() == 3);
    CHECK(std::get<ClassDecl>(d.elements[0]).name == tu::id("A"));
    CHECK(std::get<ClassDecl>(d.elements[1]).name == tu::id("B"));
    CHECK(std::get<AssocDecl>(d.elements[2]) == AssocDecl{tu::id("A"), tu::id("B")});
}

TEST_CASE("attributes with and without modifiers") {
    Diagram d = parse_diagram(
        "classdiagram Z { class A { public int x; bool y; private A self; } }");
    const auto& c = std::get<ClassDecl>(d.elements[0]);
    REQUIRE(c.attrs.size() == 3);
    CHECK(c.attrs[0] == Attribute{Modifier::Public, tu::id("int"), tu::id("x")});
    CHECK(c.attrs[1] == Attribute{std::nullopt, tu::id("bool"), tu::id("y")});
    CHECK(c.attrs[2] == Attribute{Modifier::Private, tu::id("A"), tu::id("self")});
}

TEST_CASE("multiple supers, duplicates permitted") {
    Diagram d = parse_diagram("classdiagram Z { class A extends B, C, B; }");
    const auto& c = std::get<ClassDecl>(d.elements[0]);
    CHECK(c.supers == std::vector<Ident>{tu::id("B"), tu::id("C"), tu::id("B")});
}

TEST_CASE("invariants are opaque, trimmed, escape-aware") {
    Diagram d = parse_diagram(
        "classdiagram Z {\n"
        "  inv x > 0 ;\n"
        "  class A;\n"
        "  inv a \\; b;\n"
        "  inv ;\n"
        "}");
    REQUIRE(d.invariants.size() == 3);
    CHECK(d.invariants[0].text == "x > 0");
    CHECK(d.invariants[1].text == "a \\; b");
    CHECK(d.invariants[2].text == "");
    REQUIRE(d.elements.size() == 1);
}

TEST_CASE("empty class body and semicolon form are the same declaration") {
    Diagram a = parse_diagram("classdiagram X { class A { } }");
    Diagram b = parse_diagram("classdiagram X { class A; }");
    CHECK(a == b);
}

TEST_CASE("comments and whitespace are insignificant") {
    Diagram a = parse_diagram(
        "// header\nclassdiagram X { // trailing\n  class A // c\n  extends B;\n}");
    Diagram b = parse_diagram("classdiagram X { class A extends B; }");
    CHECK(a == b);
}

TEST_CASE("parse is deterministic") {
    CHECK(parse_diagram(tu::kAbcSource) == parse_diagram(tu::kAbcSource));
}

TEST_CASE("parse errors carry 1-based position and expectation") {
    SUBCASE("missing super after extends") {
        try {
            parse_diagram("classdiagram B {\n  class A extends ;\n}");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 19);
            CHECK(e.expected() == "identifier");
        }
    }
    SUBCASE("unbalanced brace") {
        CHECK_THROWS_AS(parse_diagram("classdiagram X { class A;"), ParseError);
    }
    SUBCASE("keywords are not identifiers") {
        CHECK_THROWS_AS(parse_diagram("classdiagram X { class class; }"), ParseError);
        CHECK_THROWS_AS(parse_diagram("classdiagram extends { }"), ParseError);
    }
    SUBCASE("leading underscore is reserved") {
        CHECK_THROWS_AS(parse_diagram("classdiagram X { class _A; }"), ParseError);
    }
    SUBCASE("single dash") {
        CHECK_THROWS_AS(parse_diagram("classdiagram X { association A - B; }"), ParseError);
    }
    SUBCASE("unterminated invariant") {
        CHECK_THROWS_AS(parse_diagram("classdiagram X { inv x > 0 }"), ParseError);
    }
    SUBCASE("trailing input after the diagram") {
        CHECK_THROWS_AS(parse_diagram("classdiagram X { } class B;"), ParseError);
    }
    SUBCASE("first error wins") {
        try {
            parse_diagram("classdiagram {\n  class ;\n}");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);  // the missing diagram name, not the later one
        }
    }
}

TEST_CASE("identifier validation") {
    CHECK(is_valid_ident("a"));
    CHECK(is_valid_ident("_X0"));
    CHECK(is_valid_ident("Ab_9"));
    CHECK(!is_valid_ident(""));
    CHECK(!is_valid_ident("9a"));
    CHECK(!is_valid_ident("a b"));
    CHECK_THROWS_AS(Ident("not ok"), std::invalid_argument);
}

TEST_CASE("parse_files reads in argument order and reports the failing path") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cdsem_parser_test";
    fs::create_directories(dir);
    auto write = [&](const char* name, const char* text) {
        std::ofstream(dir / name) << text;
        return dir / name;
    };
    auto abc_path = write("ABC.cd", tu::kAbcSource);
    auto ca_path = write("CA.cd", tu::kCaSource);

    SUBCASE("order preserved") {
        auto docs = parse_files({abc_path, ca_path});
        REQUIRE(docs.size() == 2);
        CHECK(docs[0].name == tu::id("ABC"));
        CHECK(docs[1].name == tu::id("CA"));
    }
    SUBCASE("empty list") { CHECK(parse_files({}).empty()); }
    SUBCASE("missing file names the path") {
        try {
            parse_files({dir / "missing.cd"});
            FAIL("expected IoError");
        } catch (const IoError& e) {
            CHECK(std::string(e.what()).find("missing.cd") != std::string::npos);
        }
    }
    SUBCASE("parse failure names the path") {
        auto bad = write("bad.cd", "classdiagram X {");
        try {
            parse_files({abc_path, bad});
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("bad.cd") != std::string::npos);
        }
    }
    SUBCASE("duplicate diagram names are allowed") {
        auto docs = parse_files({abc_path, abc_path});
        CHECK(docs.size() == 2);
    }
    fs::remove_all(dir);
}

TEST_CASE("round trip: parse of the canonical print is the identity") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        Diagram d = tu::any_diagram(rng);
        Diagram back = parse_diagram(to_source(d));
        REQUIRE(back == d);
    }
}
