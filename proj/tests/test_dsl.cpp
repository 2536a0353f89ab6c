#include <trw/family_dsl.hpp>

#include <string>

#include "doctest.h"

using trw::IntPoly;

namespace {

void expect_syntax_error(const std::string& text, std::size_t line, std::size_t col,
                         const std::string& expected, const std::string& found) {
    try {
        trw::parse_family(text);
        FAIL_CHECK("no SyntaxError for: " << text);
    } catch (const trw::SyntaxError& e) {
        CHECK(e.line == line);
        CHECK(e.column == col);
        CHECK(e.expected == expected);
        CHECK(e.found == found);
    }
}

void expect_expr_error(const std::string& text, std::size_t line, std::size_t col,
                       const std::string& expected, const std::string& found) {
    try {
        trw::parse_poly_expr(text, {"a"});
        FAIL_CHECK("no SyntaxError for: " << text);
    } catch (const trw::SyntaxError& e) {
        CHECK(e.line == line);
        CHECK(e.column == col);
        CHECK(e.expected == expected);
        CHECK(e.found == found);
    }
}

}  // namespace

TEST_CASE("family documents: well-formed input") {
    auto fam = trw::parse_family("name: f\nparams: a\npoly: x^2 - a*x - 1\nrange a: 1..5\n");
    CHECK(fam.name == "f");
    REQUIRE(fam.params.size() == 1);
    CHECK(fam.params[0] == "a");
    CHECK(fam.degree == 2);
    REQUIRE(fam.default_ranges.size() == 1);
    CHECK(fam.default_ranges[0].lo == 1);
    CHECK(fam.default_ranges[0].hi == 5);
    CHECK(fam.poly.instantiate({{"a", mpz_class(4)}}) == (IntPoly{-1, -4, 1}));

    // A parameter without an explicit range defaults to [-10, 10].
    auto fam2 = trw::parse_family("name: g\nparams: a\npoly: x^3 - a*x - 1\n");
    CHECK(fam2.default_ranges[0].lo == -10);
    CHECK(fam2.default_ranges[0].hi == 10);

    // Two parameters, ranges in any order, aligned with the params list.
    auto fam3 = trw::parse_family(
        "name: h\nparams: a, b\npoly: x^2 - a*x - b*x - 1\nrange b: 2..9\n");
    REQUIRE(fam3.params.size() == 2);
    CHECK(fam3.default_ranges[0].lo == -10);
    CHECK(fam3.default_ranges[0].hi == 10);
    CHECK(fam3.default_ranges[1].lo == 2);
    CHECK(fam3.default_ranges[1].hi == 9);
    CHECK(fam3.poly.instantiate({{"a", mpz_class(1)}, {"b", mpz_class(2)}}) ==
          (IntPoly{-1, -3, 1}));

    // Windows line endings parse the same as Unix ones.
    auto fam4 = trw::parse_family("name: f\r\nparams: a\r\npoly: x^2 - a*x - 1\r\n");
    CHECK(fam4.degree == 2);

    // Negative range bounds.
    auto fam5 = trw::parse_family("name: f\nparams: a\npoly: x^2 - a*x - 1\nrange a: -7..-2\n");
    CHECK(fam5.default_ranges[0].lo == -7);
    CHECK(fam5.default_ranges[0].hi == -2);
}

TEST_CASE("family documents: every malformed shape has a pinned position") {
    expect_syntax_error("name: f\nparams: a\npoly: x^2 + @\n", 3, 13, "a valid token", "'@'");
    expect_syntax_error("name: f\nparams: a\npoly: x^2 + 2a\n", 3, 14, "end of line", "'a'");
    expect_syntax_error("name: f\nparams: a\npoly: x^1001 - a*x - 1\n", 3, 9,
                        "an exponent of at most 1000", "'1001'");
    expect_syntax_error("name: f\nparams: a\npoly: x^-2 - 1\n", 3, 9,
                        "a natural-number exponent", "'-'");
    expect_syntax_error("name: f\nparams: x\npoly: x^2 - 1\n", 2, 9,
                        "a parameter name other than 'x'", "'x'");
    expect_syntax_error("name: f\nparams: a, a\npoly: x^2 - a*x - 1\n", 2, 12,
                        "a distinct parameter name", "'a'");
    expect_syntax_error("name: f\nparams: a, b, c\npoly: x^2 - a*x - 1\n", 2, 13,
                        "at most 2 parameters", "','");
    expect_syntax_error("name: f\nparams: a\n", 4, 1, "'poly:' line", "end of document");
    expect_syntax_error("", 2, 1, "'name:' line", "end of document");
    expect_syntax_error("name: f\nparams: a\npoly: x^2 - b*x - 1\n", 3, 13,
                        "'x' or a declared parameter", "'b'");
    expect_syntax_error(
        "name: f\nparams: a\npoly: x^2 - a*x - 1\nrange a: 1..5\nrange a: 2..6\n", 5, 7,
        "a parameter without a range yet", "'a'");
    expect_syntax_error("name: f\nparams: a\npoly: x^2 - a*x - 1\nrange b: 1..5\n", 4, 7,
                        "a declared parameter", "'b'");
    expect_syntax_error(
        "name: f\nparams: a\npoly: x^2 - a*x - 1\nname: g\nparams: b\npoly: x^2 - b*x - 1\n", 4,
        1, "'range' or end of document", "'name'");
    expect_syntax_error("name: f\nparams: a\npoly: x^2 - (a + 3*x - 1\n", 3, 25, "')'",
                        "end of line");
    expect_syntax_error("name: f\nparams: a\npoly: x^2 - a*x - 1\nrange a: 1.5\n", 4, 11, "'..'",
                        "'.'");
    expect_syntax_error("name: f\nparams: a\npoly: x^2 - a*x - 1\nrange a: 5..1\n", 4, 10,
                        "a nonempty range (lo <= hi)", "5..1");
}

TEST_CASE("family documents: hypothesis violations carry the broken hypothesis") {
    struct Row {
        const char* text;
        const char* hypothesis;
        const char* detail;
    };
    const Row rows[] = {
        {"name: f\nparams: a\npoly: 2*x^2 - a*x - 1\n", "monic",
         "leading coefficient of 2*x^2 - a*x - 1 is not the constant 1"},
        {"name: f\nparams: a\npoly: x - a\n", "degree >= 2", "family polynomial has degree 1"},
        {"name: f\nparams: a\npoly: x^2 - a*x - 2\n", "constant term +1 or -1", "p_0 = -2"},
        {"name: f\nparams: a\npoly: x^2 - 1\n", "some nonconstant middle coefficient",
         "p_1 .. p_1 are all constant in the parameters"},
    };
    for (const auto& row : rows) {
        try {
            trw::parse_family(row.text);
            FAIL_CHECK("no HypothesisViolation for: " << row.text);
        } catch (const trw::HypothesisViolation& e) {
            CHECK(e.hypothesis == row.hypothesis);
            CHECK(e.detail == row.detail);
        }
    }
}

TEST_CASE("polynomial expressions") {
    auto p = trw::parse_poly_expr("x^2 - 2*a*x - 1", {"a"});
    CHECK(p.degree() == 2);
    CHECK(p.to_string() == "x^2 - 2*a*x - 1");
    CHECK(p.instantiate({{"a", mpz_class(3)}}) == (IntPoly{-1, -6, 1}));

    CHECK(trw::parse_poly_expr("-x^2 + 1", {"a"}).to_string() == "-x^2 + 1");
    CHECK(trw::parse_poly_expr("x^0", {}).instantiate({}) == (IntPoly{1}));
    CHECK(trw::parse_poly_expr("2^10", {}).instantiate({}) == (IntPoly{1024}));
    CHECK(trw::parse_poly_expr("(x - a)*(x + a) - (a^2)*1 + a^2 - x^2 + x^2 - a*x - 1", {"a"})
              .to_string() == "x^2 - a*x - (a^2 + 1)");

    // The exponent cap is inclusive at 1000.
    CHECK(trw::parse_poly_expr("x^1000", {}).degree() == 1000);
    expect_expr_error("x^1001", 1, 3, "an exponent of at most 1000", "'1001'");

    expect_expr_error("x^2 - 1\nx - 1", 2, 1, "a single-line expression", "a second line");
    expect_expr_error("x^2 - 1 junk", 1, 9, "end of line", "'junk'");
}
