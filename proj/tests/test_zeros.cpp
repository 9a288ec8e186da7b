#include "hyperslice/expression.hpp"
#include "hyperslice/zeros.hpp"
#include "support.hpp"

using namespace hyperslice;
using namespace hyperslice::testing;

namespace {

Element e(const Algebra& A, int k) { return Element::basis(A.get(), k); }
Element r(const Algebra& A, double v) { return Element::real(A.get(), v); }
OrderedPolynomial P(const std::string& s, const Algebra& A, int n = 0) { return parse_expression(s, A, n); }

/// Checks every reported zero against the residual bound, spheres at random units.
void expect_valid(const OrderedPolynomial& p, const ZeroReport& z, Rng& rng) {
    const double bound = zero_residual_bound(p);
    const Algebra& A = p.algebra();
    for (const auto& x : z.isolated) EXPECT_LE(euclidean_norm(poly_eval(p, {x})), bound) << to_string(x);
    for (const auto& s : z.spherical)
        for (int t = 0; t < 8; ++t) {
            Element x = r(A, s.alpha) + random_unit(A, rng) * s.beta;
            EXPECT_LE(euclidean_norm(poly_eval(p, {x})), bound) << s.alpha << " " << s.beta;
        }
    EXPECT_LE(z.residual_max, bound);
}

bool has_point(const ZeroReport& z, const Element& q, double tol) {
    for (const auto& x : z.isolated)
        if (distance(x, q) <= tol) return true;
    return false;
}

}  // namespace

TEST(Roots, SphereOfUnits) {
    auto H = quaternions();
    auto z = roots_one_var(P("x1^2 + (1)", H));
    ASSERT_EQ(z.spherical.size(), 1u);
    EXPECT_NEAR(z.spherical[0].alpha, 0, 1e-10);
    EXPECT_NEAR(z.spherical[0].beta, 1, 1e-10);
    EXPECT_TRUE(z.isolated.empty());
    Rng rng(71);
    expect_valid(P("x1^2 + (1)", H), z, rng);
}

TEST(Roots, LinearHasIsolatedRoot) {
    for (const auto& A : {quaternions(), octonions()}) {
        Element q = element_from(A, std::vector<double>(A->dim(), 0.5));
        OrderedPolynomial p(A, 1);
        p.add_term({1}, ExactElement::one(A.get()));
        p.add_term({0}, -to_exact(q));
        auto z = roots_one_var(p);
        ASSERT_EQ(z.isolated.size(), 1u);
        EXPECT_TRUE(z.spherical.empty());
        EXPECT_ELEMENT_NEAR(z.isolated[0], q, 1e-10);
    }
}

TEST(Roots, FiberOfF2AtHalfJ) {
    auto H = quaternions();
    auto z = roots_one_var(P("x1^2 + (1.25)", H));
    ASSERT_EQ(z.spherical.size(), 1u);
    EXPECT_NEAR(z.spherical[0].alpha, 0, 1e-10);
    EXPECT_NEAR(z.spherical[0].beta, std::sqrt(1.25), 1e-10);
}

TEST(Roots, FactorizedQuadratic) {
    // (x - q1) * (x - q2) vanishes at q1; its other root lies on the sphere of q2.
    auto H = quaternions();
    Element q1 = element_from(H, {1, 2, -1, 0.5}), q2 = element_from(H, {-0.5, 0, 1, 3});
    OrderedPolynomial a(H, 1), b(H, 1);
    a.add_term({1}, ExactElement::one(H.get()));
    a.add_term({0}, -to_exact(q1));
    b.add_term({1}, ExactElement::one(H.get()));
    b.add_term({0}, -to_exact(q2));
    auto p = star_product(a, b);
    auto z = roots_one_var(p);
    EXPECT_EQ(z.isolated.size(), 2u);
    EXPECT_TRUE(has_point(z, q1, 1e-8));
    for (const auto& x : z.isolated) {
        auto d = cone_decompose(x), d1 = cone_decompose(q1), d2 = cone_decompose(q2);
        bool on1 = std::abs(d.alpha - d1.alpha) < 1e-8 && std::abs(d.beta - d1.beta) < 1e-8;
        bool on2 = std::abs(d.alpha - d2.alpha) < 1e-8 && std::abs(d.beta - d2.beta) < 1e-8;
        EXPECT_TRUE(on1 || on2);
    }
    Rng rng(72);
    expect_valid(p, z, rng);
}

TEST(Roots, NormalPolynomial) {
    auto H = quaternions();
    auto c = normal_polynomial(P("x1^2 + (1)", H));
    std::vector<Rational> expected = {1, 0, 2, 0, 1};
    EXPECT_EQ(c, expected);
    auto d = normal_polynomial(P("x1 + (0 i 1)", H));
    std::vector<Rational> e2 = {1, 0, 1};
    EXPECT_EQ(d, e2);
}

TEST(Roots, RealRootsAndMultiplicity) {
    auto H = quaternions();
    auto z = roots_one_var(P("x1^3 + (-2) x1^2 + (1) x1", H));
    EXPECT_TRUE(has_point(z, r(H, 0), 1e-7));
    EXPECT_TRUE(has_point(z, r(H, 1), 1e-6));
    EXPECT_TRUE(z.spherical.empty());
}

TEST(Roots, Errors) {
    auto H = quaternions();
    try {
        roots_one_var(P("(0 i 2)", H, 1));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::ConstantPolynomial);
    }
    try {
        roots_one_var(P("x1^2 + (0 e12 1)", clifford(0, 3)));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::UnsupportedKind);
    }
    EXPECT_THROW(roots_one_var(P("x1^2 + (1)", clifford(1, 1))), Error);
}

TEST(Roots, CliffordParavectors) {
    auto C = clifford(0, 3);
    Rng rng(73);
    auto p = P("x1^2 + (1)", C);
    auto z = roots_one_var(p);
    ASSERT_EQ(z.spherical.size(), 1u);
    expect_valid(p, z, rng);
    auto q = P("x1 + (-1 e1 -1 e2 2)", C);
    auto w = roots_one_var(q);
    ASSERT_EQ(w.isolated.size(), 1u);
    EXPECT_ELEMENT_NEAR(w.isolated[0], element_from(C, {1, 1, -2, 0, 0, 0, 0, 0}), 1e-10);
}

TEST(Roots, RandomPolynomialsRespectBounds) {
    Rng rng(74);
    for (const auto& A : {quaternions(), octonions()})
        for (int t = 0; t < 20; ++t) {
            OrderedPolynomial p = random_polynomial(A, 1, 4, 4, rng);
            p.add_term({5}, ExactElement::one(A.get()));
            auto z = roots_one_var(p);
            EXPECT_TRUE(z.refinement_failures.empty()) << to_expression(p);
            EXPECT_FALSE(z.isolated.empty() && z.spherical.empty()) << to_expression(p);
            expect_valid(p, z, rng);
        }
}

TEST(Roots, SpheresAreConstant) {
    Rng rng(75);
    auto O = octonions();
    // (x^2 + 4) * (x - e3) has the sphere of radius 2 and the root e3 on the unit sphere.
    auto p = star_product(P("x1^2 + (4)", O), P("x1 + (0 e3 -1)", O));
    auto z = roots_one_var(p);
    ASSERT_EQ(z.spherical.size(), 1u);
    EXPECT_NEAR(z.spherical[0].beta, 2, 1e-9);
    EXPECT_TRUE(has_point(z, e(O, 3), 1e-8));
    expect_valid(p, z, rng);
}

TEST(Restrict, FirstVariable) {
    auto H = quaternions();
    auto f = P("x1^2 x2 + (0 i 1) x1 + x2^2", H);
    auto g = restrict_to_first_variable(f, {e(H, 2)});
    EXPECT_EQ(g.n(), 1);
    EXPECT_EQ(g.coefficient({2}), to_exact(e(H, 2)));
    EXPECT_EQ(g.coefficient({1}), to_exact(e(H, 1)));
    EXPECT_EQ(g.coefficient({0}), to_exact(r(H, -1)));
}

TEST(Scan, Taxonomy) {
    auto H = quaternions();
    Rng rng(76);
    std::vector<std::vector<Element>> samples;
    for (int t = 0; t < 5; ++t) samples.push_back({random_element(H, rng)});

    auto s1 = zero_scan(P("x1", H, 2), samples);
    for (const auto& fb : s1.fibers) {
        EXPECT_EQ(fb.type, "finite");
        ASSERT_EQ(fb.points, 1);
        EXPECT_ELEMENT_NEAR(fb.report.isolated[0], r(H, 0), 1e-12);
    }

    auto f2 = P("x1^2 + x2^2 + (1)", H);
    // x2 real with |x2| < 1 or x2 = 2: a sphere; x2 = 2i: two real points; x2 a unit: one point.
    auto s2 = zero_scan(f2, {{r(H, 0.5)}, {e(H, 1) * 2.0}, {e(H, 1)}, {r(H, -0.3)}, {r(H, 2)}});
    EXPECT_EQ(s2.fibers[0].type, "spheres");
    EXPECT_NEAR(s2.fibers[0].report.spherical[0].beta, std::sqrt(1.25), 1e-10);
    EXPECT_EQ(s2.fibers[1].type, "finite");
    ASSERT_EQ(s2.fibers[1].points, 2);
    for (const auto& x : s2.fibers[1].report.isolated) {
        EXPECT_TRUE(is_real(x, 1e-9));
        EXPECT_NEAR(std::abs(x[0]), std::sqrt(3.0), 1e-9);
    }
    EXPECT_EQ(s2.fibers[2].type, "finite");
    ASSERT_EQ(s2.fibers[2].points, 1);
    EXPECT_ELEMENT_NEAR(s2.fibers[2].report.isolated[0], r(H, 0), 1e-6);
    EXPECT_EQ(s2.fibers[3].type, "spheres");
    EXPECT_EQ(s2.fibers[4].type, "spheres");
    EXPECT_NEAR(s2.fibers[4].report.spherical[0].beta, std::sqrt(5.0), 1e-10);
    EXPECT_EQ(s2.counts["spheres"], 3);

    auto s3 = zero_scan(P("x1^2 + (1)", H, 2), samples);
    EXPECT_EQ(s3.counts["spheres"], 5);
}

TEST(Scan, DegenerateFibers) {
    auto H = quaternions();
    auto f = P("x1 x2 + (1)", H);
    auto s = zero_scan(f, {{r(H, 0)}, {r(H, 2)}});
    EXPECT_EQ(s.fibers[0].type, "empty-leading-degenerate");
    EXPECT_TRUE(s.fibers[0].leading_degenerate);
    EXPECT_EQ(s.fibers[1].type, "finite");
    auto w = zero_scan(P("x1 x2", H), {{r(H, 0)}});
    EXPECT_EQ(w.fibers[0].type, "whole");
    std::string csv = s.csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,x_rest,type,points,spheres,residual_max,refinement_failures");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Scan, NonemptyAtDeskScale) {
    Rng rng(77);
    auto H = quaternions();
    for (int t = 0; t < 20; ++t) {
        OrderedPolynomial f = random_polynomial(H, 2, 2, 4, rng);
        f.add_term({3, 0}, ExactElement::one(H.get()));
        std::vector<std::vector<Element>> samples;
        for (int k = 0; k < 4; ++k) samples.push_back({random_element(H, rng)});
        auto s = zero_scan(f, samples);
        int nonempty = 0;
        for (const auto& fb : s.fibers) {
            nonempty += fb.points + fb.spheres > 0 || fb.type == "whole";
            expect_valid(restrict_to_first_variable(f, fb.x_rest), fb.report, rng);
        }
        EXPECT_GT(nonempty, 0) << to_expression(f);
    }
}
