#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "hyperslice/expression.hpp"
#include "support.hpp"

using namespace hyperslice;
using namespace hyperslice::testing;

namespace {

struct Outcome {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
    Json error() const { return Json::parse(err); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parse, Examples) {
    auto H = quaternions();
    auto p = parse_expression("x1^2 x2 + (1)", H);
    EXPECT_EQ(p.n(), 2);
    EXPECT_EQ(p.terms().size(), 2u);
    EXPECT_EQ(p.coefficient({2, 1}), ExactElement::one(H.get()));
    EXPECT_EQ(p.coefficient({0, 0}), ExactElement::one(H.get()));

    auto q = parse_expression("(0 i 1) x1", H);
    EXPECT_EQ(q.coefficient({1}), ExactElement::basis(H.get(), 1));

    auto r = parse_expression("- (1/3 k -2.5e-1) x1^3 - x2", H);
    ExactElement c = ExactElement::real(H.get(), Rational(-1, 3));
    c[3] = Rational(1, 4);
    EXPECT_EQ(r.coefficient({3, 0}), c);
    EXPECT_EQ(r.coefficient({0, 1}), -ExactElement::one(H.get()));
    EXPECT_EQ(parse_expression("x1 x1", H), parse_expression("x1^2", H));
    EXPECT_EQ(parse_expression("x1", H, 3).n(), 3);
}

TEST(Parse, SyntaxErrors) {
    auto H = quaternions();
    try {
        parse_expression("x1 + + x2", H);
        FAIL();
    } catch (const SyntaxError& err) {
        EXPECT_EQ(err.line(), 1);
        EXPECT_EQ(err.col(), 6);
        EXPECT_EQ(err.kind(), ErrorKind::SyntaxError);
    }
    try {
        parse_expression("x1 +\n  (1 i)", H);
        FAIL();
    } catch (const SyntaxError& err) {
        EXPECT_EQ(err.line(), 2);
        EXPECT_EQ(err.col(), 7);
    }
    for (const char* bad : {"", "x", "x0", "x1^", "(1", "(1 i 2", "x1 x2 )", "(1/0)", "x1 * x2"})
        EXPECT_THROW(parse_expression(bad, H), SyntaxError) << bad;
    try {
        parse_expression("(0 e7 1) x1", H);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::UnknownBasisName);
        EXPECT_TRUE(err.is_parse_error());
    }
    EXPECT_NO_THROW(parse_expression("(0 e7 1) x1", octonions()));
}

TEST(Parse, RoundTrip) {
    const std::vector<std::pair<std::string, Algebra>> corpus = {
        {"x1^2 x2 + (1)", quaternions()},
        {"(0 i 1) x1^2 x2 + (1)", quaternions()},
        {"(1/2 j -3) x1 x3^4 - (2) x2 + (0 k 7/5)", quaternions()},
        {"(0 e5 1) x1^2 x2 + (0 e2 1) x1", octonions()},
        {"x1^2 + (1 e12 1 e123 -1)", clifford(0, 3)},
        {"(0)", quaternions()},
    };
    for (const auto& [src, A] : corpus) {
        auto p = parse_expression(src, A);
        auto text = to_expression(p);
        EXPECT_EQ(parse_expression(text, A, p.n()), p) << src << " -> " << text;
        EXPECT_EQ(to_expression(parse_expression(text, A, p.n())), text);
    }
    Rng rng(81);
    for (const auto& A : {quaternions(), octonions(), clifford(1, 1)})
        for (int t = 0; t < 20; ++t) {
            auto p = random_polynomial(A, 3, 4, 5, rng);
            EXPECT_EQ(parse_expression(to_expression(p), A, 3), p);
        }
}

TEST(Run, EvalExample) {
    auto o = run({"eval", "--algebra", "H", "--poly", "x1 x2", "--point", "[[0,1,i],[0,1,j]]"});
    ASSERT_EQ(o.code, 0) << o.err;
    Json j = o.json();
    EXPECT_EQ(j["schema"], "hyperslice/1");
    EXPECT_EQ(j["command"], "eval");
    EXPECT_EQ(j["value"], Json::parse("[0.0, 0.0, 0.0, 1.0]"));
    auto t = run({"eval", "--poly", "x1^2", "--point", "[[0,2,[0,0,1]]]", "--format", "text"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out, "-4\n");
}

TEST(Run, Regular) {
    Json j = run({"regular", "--algebra", "H", "--poly", "x1^2 x2"}).json();
    EXPECT_EQ(j["regular"], true);
    EXPECT_EQ(j["split_holomorphic"], true);
    EXPECT_EQ(j["one_variable_regular"], true);
    EXPECT_TRUE(j["violations"].empty());
}

TEST(Run, Diff) {
    Json j = run({"diff", "--poly", "x1 x2 + (0 i 1) x2^3", "--var", "2"}).json();
    EXPECT_EQ(j["expression"], "(0 i 3) x2^2 + (1) x1");
    Json c = run({"diff", "--poly", "x1 x2", "--var", "1", "--conj"}).json();
    EXPECT_EQ(c["expression"], "(0)");
    EXPECT_EQ(c["stem"]["components"].size(), 4u);
}

TEST(Run, Product) {
    Json j = run({"product", "--poly", "(0 i 1) x1", "--poly2", "(0 j 1) x1"}).json();
    EXPECT_EQ(j["product"], "(0 k 1) x1^2");
    EXPECT_EQ(j["stem_agrees"], true);
}

TEST(Run, Cauchy) {
    auto o = run({"cauchy", "--poly", "x1 x2", "--point", "[[0.2,0.3,i],[0.1,-0.4,j]]", "--radii", "1.5,1.5",
                  "--samples", "128"});
    ASSERT_EQ(o.code, 0) << o.err;
    Json j = o.json();
    EXPECT_EQ(j["N"], 128);
    EXPECT_LE(j["abs_error"].get<double>(), 1e-8);
    auto a = run({"cauchy", "--poly", "x1 x2", "--point", "[[0.2,0.3,i],[0.1,0.4,j]]", "--radii", "1.5,1.5",
                  "--slice-unit", "0,1,0", "--kernel", "associative", "--samples", "64"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.json()["kernel"], "associative");
}

TEST(Run, RootsAndScan) {
    Json r = run({"roots", "--poly", "x1^2 + (1)"}).json();
    ASSERT_EQ(r["spherical"].size(), 1u);
    EXPECT_NEAR(r["spherical"][0]["beta"].get<double>(), 1.0, 1e-10);

    Json s = run({"scan", "--poly", "x1^2 + x2^2 + (1)", "--points", "[[0.5],[[0,2,0,0]],[i]]"}).json();
    ASSERT_EQ(s["fibers"].size(), 3u);
    EXPECT_EQ(s["fibers"][0]["type"], "spheres");
    EXPECT_EQ(s["fibers"][1]["points"], 2);
    EXPECT_EQ(s["fibers"][2]["points"], 1);

    auto csv = run({"scan", "--poly", "x1 + x2", "--random", "3", "--format", "csv"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);
}

TEST(Run, AlgebraDump) {
    Json j = run({"algebra-dump", "--algebra", "Cl(0,3)"}).json();
    EXPECT_EQ(j["dim"], 8);
    EXPECT_TRUE(algebra_from_json(j)->same_as(*clifford(0, 3)));
}

TEST(Run, ExitCodes) {
    auto parse = run({"eval", "--poly", "x1 + + x2", "--point", "[[0,1,i]]"});
    EXPECT_EQ(parse.code, cli::kParseError);
    Json e = parse.error();
    EXPECT_EQ(e["error"], "SyntaxError");
    EXPECT_NE(e["message"].get<std::string>().find("1:6"), std::string::npos);

    EXPECT_EQ(run({"eval", "--poly", "(0 q 1) x1", "--point", "[[0,1,i]]"}).code, cli::kParseError);
    EXPECT_EQ(run({"eval", "--poly", "x1", "--point", "[[0,1,"}).code, cli::kParseError);
    EXPECT_EQ(run({"eval", "--poly", "x1"}).code, cli::kParseError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);

    auto domain = run({"eval", "--poly", "x1", "--point", "[[0,1,[0,2,0]]]"});
    EXPECT_EQ(domain.code, cli::kDomainError);
    EXPECT_EQ(domain.error()["error"], "NotImaginaryUnit");
    EXPECT_EQ(run({"roots", "--poly", "(3)"}).code, cli::kDomainError);
    EXPECT_EQ(run({"cauchy", "--poly", "x1", "--point", "[[2,0,i]]", "--radii", "1"}).code, cli::kDomainError);
    EXPECT_EQ(run({"eval", "--algebra", "Cl(5,5)", "--poly", "x1", "--point", "[[0,1,e1]]"}).code, cli::kDomainError);

    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"eval", "--help"}).code, 0);
}

TEST(Run, ToleranceFromEnvironment) {
    ::setenv("HYPERSLICE_TOL", "1e-3", 1);
    EXPECT_DOUBLE_EQ(cli::default_tolerance(), 1e-3);
    EXPECT_EQ(run({"eval", "--poly", "x1", "--point", "[[0,1,[0,1.0001,0]]]"}).code, 0);
    ::setenv("HYPERSLICE_TOL", "garbage", 1);
    EXPECT_DOUBLE_EQ(cli::default_tolerance(), kDefaultTol);
    ::unsetenv("HYPERSLICE_TOL");
    EXPECT_EQ(run({"eval", "--poly", "x1", "--point", "[[0,1,[0,1.0001,0]]]"}).code, cli::kDomainError);
}

TEST(Helpers, QuoteIdentifiers) {
    EXPECT_EQ(cli::quote_identifiers("[[0,1,i],[0,1,e12]]"), "[[0,1,\"i\"],[0,1,\"e12\"]]");
    EXPECT_EQ(cli::quote_identifiers("[1e-3, true, \"j\"]"), "[1e-3, true, \"j\"]");
    auto x = cli::parse_point("[[0.5, -2, k]]", quaternions(), kDefaultTol);
    EXPECT_DOUBLE_EQ(x.coords[0].beta, 2);
    EXPECT_EQ(x.coords[0].J, -Element::basis(quaternions().get(), 3));
}
