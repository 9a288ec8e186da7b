#include "support.hpp"

using namespace hyperslice;
using namespace hyperslice::testing;

namespace {

Element e(const Algebra& A, int k) { return Element::basis(A.get(), k); }
ExactElement ex(const Algebra& A, int k) { return ExactElement::basis(A.get(), k); }
ExactElement one(const Algebra& A) { return ExactElement::one(A.get()); }

SliceFunction monomial(const Algebra& A, std::vector<int> ell, const ExactElement& a) {
    return SliceFunction(monomial_stem(A, ell, a));
}

/// Stem whose components vanish outside the given subsets; coefficients real when real_only.
StemPoly restricted_stem(const Algebra& A, int n, const std::vector<Subset>& allowed, bool real_only, Rng& rng) {
    StemPoly F = random_stem(A, n, 3, 2, rng);
    std::vector<ElemPoly> comps(F.components().size(), ElemPoly(2 * n));
    for (Subset K : allowed)
        for (const auto& [ex_, a] : F[K].terms())
            comps[K].add_term(ex_, real_only ? ExactElement::real(A.get(), a[0]) : a);
    return StemPoly::make(A, n, comps);
}

}  // namespace

TEST(Eval, Examples) {
    auto H = quaternions();
    auto f = monomial(H, {1, 1}, one(H));
    EXPECT_ELEMENT_NEAR(f.at({e(H, 1), e(H, 2)}), e(H, 3), 1e-15);

    Element a = element_from(H, {1, -2, 0.5, 3});
    SliceFunction c(StemPoly::constant(H, 2, to_exact(a)));
    Rng rng(31);
    EXPECT_ELEMENT_NEAR(c(random_point(H, 2, rng)), a, 1e-15);
}

TEST(Eval, ProductOfCoordinatesExpands) {
    Rng rng(32);
    auto O = octonions();
    auto f = monomial(O, {1, 1}, one(O));
    for (int t = 0; t < 20; ++t) {
        SlicePoint x = random_point(O, 2, rng);
        const auto& c = x.coords;
        Element expected = Element::real(O.get(), c[0].alpha * c[1].alpha) + c[0].J * (c[1].alpha * c[0].beta) +
                           c[1].J * (c[0].alpha * c[1].beta) + (c[0].J * c[1].J) * (c[0].beta * c[1].beta);
        EXPECT_ELEMENT_NEAR(f(x), expected, 1e-13);
    }
}

TEST(Eval, WellPosedUnderSignFlips) {
    Rng rng(33);
    for (const auto& A : {quaternions(), octonions(), clifford(0, 3)}) {
        SliceFunction f(random_stem(A, 3, 4, 3, rng));
        for (int t = 0; t < 10; ++t) {
            SlicePoint x = random_point(A, 3, rng);
            Element v = f(x);
            for (Subset H = 1; H < 8; ++H) {
                auto al = x.alphas(), be = x.betas();
                auto J = x.units();
                for (int h : elements(H)) {
                    be[h - 1] = -be[h - 1];
                    J[h - 1] = -J[h - 1];
                }
                EXPECT_ELEMENT_NEAR(eval_parts(f, al, be, J), v, 1e-12 * (1 + euclidean_norm(v)));
            }
        }
    }
}

TEST(Eval, Errors) {
    auto H = quaternions();
    SliceFunction f(monomial_stem(H, {1}, one(H)), DomainSpec::discs({0}, {1}));
    try {
        f.at({e(H, 1) * 2.0});
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::OutsideDomain);
    }
    EXPECT_ELEMENT_NEAR(f.at({e(H, 1) * 0.5}), e(H, 1) * 0.5, 1e-15);
    try {
        eval_parts(f, {0}, {0.5}, {e(octonions(), 1)});
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::AlgebraMismatch);
    }
    EXPECT_THROW(SliceFunction(StemPoly::constant(clifford(1, 0), 1, ExactElement::one(clifford(1, 0).get()))),
                 Error);
}

TEST(Representation, Examples) {
    auto H = quaternions();
    auto f = monomial(H, {1}, one(H));
    Element I = e(H, 1), J = (e(H, 2) + e(H, 3)) / std::sqrt(2.0);
    SlicePoint y = SlicePoint::from_parts({1}, {2}, {I});
    SlicePoint x = SlicePoint::from_parts({1}, {2}, {J});
    EXPECT_ELEMENT_NEAR(representation_eval(f, y, x), Element::real(H.get(), 1) + J * 2.0, 1e-14);
    EXPECT_ELEMENT_NEAR(representation_eval(f, y, y), f(y), 1e-14);
}

TEST(Representation, MatchesEval) {
    Rng rng(34);
    for (const auto& A : {quaternions(), octonions()})
        for (int t = 0; t < 20; ++t) {
            SliceFunction f(random_stem(A, 2, 3, 3, rng));
            SlicePoint y = random_point(A, 2, rng);
            SlicePoint x = y.with_units({random_unit(A, rng), random_unit(A, rng)});
            Element v = f(x);
            EXPECT_ELEMENT_NEAR(representation_eval(f, y, x), v, 1e-10);
            EXPECT_ELEMENT_NEAR(representation_eval(f.as_black_box(), y, x), v, 1e-10);
        }
}

TEST(Representation, SphereMismatch) {
    auto H = quaternions();
    auto f = monomial(H, {1}, one(H));
    try {
        representation_eval(f, SlicePoint::from_parts({1}, {2}, {e(H, 1)}), SlicePoint::from_parts({1}, {3}, {e(H, 1)}));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::SphereMismatch);
    }
}

TEST(StemFromValues, Examples) {
    auto H = quaternions();
    Element a = element_from(H, {2, 0, -1, 1});
    SliceFunction c(StemPoly::constant(H, 1, to_exact(a)));
    SlicePoint y = SlicePoint::from_parts({0.3}, {0.7}, {e(H, 2)});
    auto values = [&](const SliceFunction& f, const SlicePoint& p) {
        std::vector<Element> v;
        for (Subset Hs = 0; Hs < (1u << p.n()); ++Hs) v.push_back(f(p.conjugated(Hs)));
        return v;
    };
    auto F = stem_from_values(values(c, y), y);
    EXPECT_ELEMENT_NEAR(F.comps[0], a, 1e-15);
    EXPECT_ELEMENT_NEAR(F.comps[1], Element::zero(H.get()), 1e-15);

    auto x1 = monomial(H, {1}, one(H));
    auto G = stem_from_values(values(x1, y), y);
    EXPECT_ELEMENT_NEAR(G.comps[0], Element::real(H.get(), 0.3), 1e-15);
    EXPECT_ELEMENT_NEAR(G.comps[1], Element::real(H.get(), 0.7), 1e-15);

    Rng rng(35);
    auto f = monomial(H, {1, 1}, one(H));
    SlicePoint y2 = random_point(H, 2, rng);
    auto R = stem_from_values(values(f, y2), y2);
    auto expected = monomial_stem(H, {1, 1}, one(H)).evaluate(y2.ab());
    for (int K = 0; K < 4; ++K) EXPECT_ELEMENT_NEAR(R.comps[K], expected.comps[K], 1e-12);
}

TEST(Sliceness, Examples) {
    auto H = quaternions();
    Rng rng(36);
    std::vector<SlicePoint> samples;
    for (int t = 0; t < 20; ++t) samples.push_back(random_point(H, 2, rng));
    std::vector<Element> I = {e(H, 1), e(H, 1)};

    SliceFunction f(random_stem(H, 2, 3, 3, rng));
    EXPECT_LE(sliceness_test(f.as_black_box(), I, samples).max_residual, 1e-10);

    BlackBox x1x2 = [](const std::vector<Element>& x) { return x[0] * x[1]; };
    BlackBox x2x1 = [](const std::vector<Element>& x) { return x[1] * x[0]; };
    EXPECT_LE(sliceness_test(x1x2, I, samples).max_residual, 1e-10);
    EXPECT_GT(sliceness_test(x2x1, I, samples).max_residual, 0.1);
}

TEST(Sliceness, FailuresPropagate) {
    auto H = quaternions();
    BlackBox bad = [](const std::vector<Element>&) -> Element {
        throw Error(ErrorKind::NotInvertible, "boom");
    };
    try {
        sliceness_test(bad, {e(H, 1)}, {SlicePoint::from_parts({0}, {1}, {e(H, 2)})});
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::EvaluationFailure);
    }
}

TEST(Spherical, Examples) {
    auto H = quaternions();
    auto sq = monomial(H, {2}, one(H));
    SlicePoint x = SlicePoint::from_parts({0.4}, {1.5}, {e(H, 3)});
    EXPECT_ELEMENT_NEAR(spherical_value(sq, x), Element::real(H.get(), 0.16 - 2.25), 1e-14);
    EXPECT_ELEMENT_NEAR(spherical_derivative(sq, 1, x), Element::real(H.get(), 0.8), 1e-14);
    EXPECT_ELEMENT_NEAR(spherical_derivative(sq, 1, x), trace(x.elements()[0]), 1e-14);

    auto f = monomial(H, {1, 1}, one(H));
    Rng rng(37);
    SlicePoint y = random_point(H, 2, rng);
    EXPECT_ELEMENT_NEAR(spherical_derivative(f, 3, y), Element::real(H.get(), 1), 1e-14);

    Element a = element_from(H, {1, 2, 3, 4});
    SliceFunction c(StemPoly::constant(H, 2, to_exact(a)));
    EXPECT_ELEMENT_NEAR(spherical_value(c, y), a, 1e-15);
    for (Subset K = 1; K < 4; ++K) EXPECT_ELEMENT_NEAR(spherical_derivative(c, K, y), Element::zero(H.get()), 1e-15);
}

TEST(Spherical, RealLocus) {
    auto H = quaternions();
    auto f = monomial(H, {1, 1}, one(H));
    SlicePoint x = SlicePoint::from_parts({0.5, 0.5}, {0, 1}, {e(H, 1), e(H, 2)});
    try {
        spherical_derivative(f, 1, x);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::OnRealLocus);
    }
    EXPECT_NO_THROW(spherical_derivative(f, 2, x));
}

TEST(Spherical, IntrinsicAgreesAndDecomposes) {
    Rng rng(38);
    for (const auto& A : {quaternions(), octonions()})
        for (int t = 0; t < 10; ++t) {
            SliceFunction f(random_stem(A, 2, 3, 3, rng));
            BlackBox g = f.as_black_box();
            SlicePoint x = random_point(A, 2, rng);
            Element vs = spherical_value(f, x);
            EXPECT_ELEMENT_NEAR(spherical_value_intrinsic(g, x), vs, 1e-11);
            Element sum = vs;
            for (Subset K = 1; K < 4; ++K) {
                Element d = spherical_derivative(f, K, x);
                EXPECT_ELEMENT_NEAR(spherical_derivative_intrinsic(g, K, x), d, 1e-10);
                std::vector<Element> imK;
                for (int k : elements(K)) imK.push_back(x.coords[k - 1].J * x.coords[k - 1].beta);
                sum += ordered_product(imK, d);
            }
            EXPECT_ELEMENT_NEAR(f(x), sum, 1e-10);
            // Both are constant on the sphere S_x.
            SlicePoint y = x.with_units({random_unit(A, rng), random_unit(A, rng)});
            EXPECT_ELEMENT_NEAR(spherical_value(f, y), vs, 1e-14);
            EXPECT_ELEMENT_NEAR(spherical_value_intrinsic(g, y), vs, 1e-11);
        }
}

TEST(Spherical, ConstantOnSphereCriterion) {
    auto H = quaternions();
    StemPoly F = monomial_stem(H, {2}, one(H)) + monomial_stem(H, {1}, one(H));
    SliceFunction f(F);
    Rng rng(39);
    for (double alpha : {-0.5, 0.3, -1.2}) {
        SlicePoint x = SlicePoint::from_parts({alpha}, {0.9}, {e(H, 1)});
        double spread = 0;
        for (int t = 0; t < 10; ++t) spread = std::max(spread, distance(f(x.with_units({random_unit(H, rng)})), f(x)));
        bool derivative_zero = euclidean_norm(spherical_derivative(f, 1, x)) < 1e-12;
        EXPECT_EQ(derivative_zero, spread < 1e-12) << "alpha = " << alpha;
    }
}

TEST(Truncated, Examples) {
    Rng rng(40);
    auto O = octonions();
    SliceFunction f(random_stem(O, 3, 3, 3, rng));
    SlicePoint x = random_point(O, 3, rng);
    EXPECT_ELEMENT_NEAR(truncated_derivative(f, {}, x), f(x), 1e-13);
    EXPECT_ELEMENT_NEAR(truncated_derivative(f, {0, 0, 0}, x), spherical_value(f, x), 1e-13);
    EXPECT_ELEMENT_NEAR(truncated_derivative(f, {1, 0, 1}, x), spherical_derivative(f, 0b101, x), 1e-12);

    auto H = quaternions();
    auto g = monomial(H, {1, 1}, one(H));
    SlicePoint y = random_point(H, 2, rng);
    // eps = (1): derivative in x1 of x1 x2 is 1, leaving x2.
    EXPECT_ELEMENT_NEAR(truncated_derivative(g, {1}, y), y.elements()[1], 1e-13);
    EXPECT_ELEMENT_NEAR(iterated_spherical_derivative(g.as_black_box(), {1}, y), y.elements()[1], 1e-12);
}

TEST(Truncated, IteratedAgrees) {
    Rng rng(41);
    for (const auto& A : {quaternions(), octonions()})
        for (int t = 0; t < 4; ++t) {
            SliceFunction f(random_stem(A, 3, 3, 2, rng));
            BlackBox g = f.as_black_box();
            SlicePoint x = random_point(A, 3, rng);
            for (int order = 0; order <= 3; ++order)
                for (int bits = 0; bits < (1 << order); ++bits) {
                    std::vector<int> eps;
                    for (int k = 0; k < order; ++k) eps.push_back((bits >> k) & 1);
                    EXPECT_ELEMENT_NEAR(iterated_spherical_derivative(g, eps, x), truncated_derivative(f, eps, x),
                                        1e-9);
                }
        }
}

TEST(SliceProduct, Examples) {
    auto H = quaternions();
    auto x1 = monomial(H, {1, 0}, one(H));
    auto x2 = monomial(H, {0, 1}, one(H));
    Rng rng(42);
    for (int t = 0; t < 10; ++t) {
        SlicePoint x = random_point(H, 2, rng);
        auto p = x.elements();
        EXPECT_ELEMENT_NEAR(slice_tensor_product(x1, x2)(x), p[0] * p[1], 1e-13);
        EXPECT_ELEMENT_NEAR(slice_tensor_product(x2, x1)(x), p[0] * p[1], 1e-13);

        auto ai = monomial(H, {1, 0}, ex(H, 1));
        auto bj = monomial(H, {0, 1}, ex(H, 2));
        EXPECT_ELEMENT_NEAR(slice_tensor_product(ai, bj)(x), (p[0] * p[1]) * e(H, 3), 1e-13);
        EXPECT_ELEMENT_NEAR(slice_tensor_product(bj, ai)(x), (p[0] * p[1]) * (-e(H, 3)), 1e-13);
    }
    SliceFunction f(random_stem(H, 2, 3, 2, rng));
    SliceFunction u(StemPoly::constant(H, 2, one(H)));
    EXPECT_EQ(slice_tensor_product(f, u).stem(), f.stem());
}

TEST(SliceProduct, CJPreservingLaw) {
    Rng rng(43);
    auto H = quaternions();
    auto cj = [&](int n) {
        // Coefficients in C_i make the function C_i-preserving.
        StemPoly F = random_stem(H, n, 3, 2, rng);
        std::vector<ElemPoly> comps(F.components().size(), ElemPoly(2 * n));
        for (Subset K = 0; K < comps.size(); ++K)
            for (const auto& [ex_, a] : F[K].terms()) {
                ExactElement b = ExactElement::real(H.get(), a[0]);
                b[1] = a[1];
                comps[K].add_term(ex_, b);
            }
        return SliceFunction(StemPoly::make(H, n, comps));
    };
    for (int t = 0; t < 10; ++t) {
        SliceFunction f = cj(2), g = cj(2);
        ExactElement a = random_exact(H, rng);
        SliceFunction A(StemPoly::constant(H, 2, a));
        SliceFunction p = slice_tensor_product(f, slice_tensor_product(g, A));
        std::uniform_real_distribution<double> u(-1, 1);
        SlicePoint x = SlicePoint::from_parts({u(rng), u(rng)}, {u(rng), u(rng)}, {e(H, 1), e(H, 1)});
        Element expected = (f(x) * g(x)) * to_double(a);
        EXPECT_ELEMENT_NEAR(p(x), expected, 1e-10 * (1 + euclidean_norm(expected)));
    }
}

TEST(SliceProduct, ReducedLaw) {
    Rng rng(44);
    for (const auto& A : {quaternions(), octonions()})
        for (int t = 0; t < 10; ++t) {
            // f is 2-reduced and slice preserving, g is {2,3}-reduced.
            SliceFunction f(restricted_stem(A, 3, {0, 0b010}, true, rng));
            SliceFunction g(restricted_stem(A, 3, {0, 0b010, 0b100, 0b110}, false, rng));
            SliceFunction p = slice_tensor_product(f, g);
            SlicePoint x = random_point(A, 3, rng);
            Element expected = f(x) * g(x);
            EXPECT_ELEMENT_NEAR(p(x), expected, 1e-10 * (1 + euclidean_norm(expected)));
        }
}

TEST(IdentityPrinciple, GridDeterminesStem) {
    Rng rng(45);
    auto H = quaternions();
    const int n = 2;
    StemPoly F = random_stem(H, n, 4, 3, rng);
    // The same function written as a sum of two stems.
    StemPoly G1 = random_stem(H, n, 4, 3, rng);
    StemPoly G2 = F - G1;
    SliceFunction f(F), g1(G1), g2(G2);
    Element J = (e(H, 1) + e(H, 2) * 2.0 + e(H, 3) * 2.0) / 3.0;
    const double grid[5] = {-1.0, -0.5, 0.25, 0.75, 1.25};
    double max_value_gap = 0, max_stem_gap = 0;
    for (double a1 : grid)
        for (double b1 : grid)
            for (double a2 : grid)
                for (double b2 : grid) {
                    if (b1 == 0 || b2 == 0) continue;
                    SlicePoint y = SlicePoint::from_parts({a1, a2}, {b1, b2}, {J, J});
                    std::vector<Element> fv, gv;
                    for (Subset Hs = 0; Hs < 4; ++Hs) {
                        SlicePoint z = y.conjugated(Hs);
                        fv.push_back(f(z));
                        gv.push_back(g1(z) + g2(z));
                    }
                    for (int k = 0; k < 4; ++k) max_value_gap = std::max(max_value_gap, distance(fv[k], gv[k]));
                    auto Rf = stem_from_values(fv, y), Rg = stem_from_values(gv, y);
                    auto exact = F.evaluate(y.ab());
                    for (int K = 0; K < 4; ++K) {
                        max_stem_gap = std::max(max_stem_gap, distance(Rf.comps[K], Rg.comps[K]));
                        max_stem_gap = std::max(max_stem_gap, distance(Rf.comps[K], exact.comps[K]));
                    }
                }
    EXPECT_LE(max_value_gap, 1e-10);
    EXPECT_LE(max_stem_gap, 1e-10);
    EXPECT_EQ(G1 + G2, F);
}
