#include <gtest/gtest.h>

#include <cmath>

#include "nullcone/cone_frame.hpp"
#include "nullcone/grid.hpp"

using namespace nullcone;

namespace {
void expect_vec_near(const Vec4& a, const Vec4& b, double tol) {
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(a[i], b[i], tol) << "component " << i;
}
} // namespace

TEST(ConeFrame, HyperbolicFixtureFrameAtZero) {
    const ConeCurve c = canonical_curve(fixture(FixtureKind::Hyperbolic, 1, 2));
    const NaturalFrame f = build_frame(c, 0);
    EXPECT_NEAR(f.pairing, -2.5, 1e-14);
    expect_vec_near(f.xi, Vec4{0.5, -1, 0.5, 1}, 1e-14);
    expect_vec_near(f.N, Vec4{-0.2, 0.4, 0.2, 0.4}, 1e-14);
    expect_vec_near(f.W, Vec4{-0.4, -0.2, -0.4, 0.2}, 1e-14);
}

TEST(ConeFrame, PairingEqualsOmegaIdentity) {
    for (double m : {0.0, 1.0, 2.0}) {
        const auto gp = GeneratorPair::from_text("exp(t/3)", "cos(t) + 2", m);
        const ConeCurve c = canonical_curve(gp);
        for (double t : make_grid(-1, 1, 9)) {
            const double want = 2 * (1 + m * m) * omega(gp, t);
            EXPECT_NEAR(build_frame(c, t).pairing, want, 1e-10 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST(ConeFrame, GramConditionsHold) {
    for (auto gp : {fixture(FixtureKind::Hyperbolic, 0.5, 1), fixture(FixtureKind::Trigonometric, 1, 2)}) {
        const ConeCurve c = canonical_curve(gp);
        for (double t : make_grid(-2, 2, 41)) EXPECT_LE(max_gram_residual(build_frame(c, t)), 1e-9);
    }
}

TEST(ConeFrame, FixtureCurvatures) {
    for (double a : {0.5, 1.0, 2.0}) {
        const ConeCurve hyp = canonical_curve(fixture(FixtureKind::Hyperbolic, a, 2));
        const ConeCurve trig = canonical_curve(fixture(FixtureKind::Trigonometric, a, 0));
        for (double t : {-2.0, 0.0, 1.1}) {
            const CurvatureTriple kh = curvatures(hyp, t), kt = curvatures(trig, t);
            EXPECT_NEAR(kh.h, 0, 1e-9);
            EXPECT_NEAR(kh.k1, a * a, 1e-9);
            EXPECT_NEAR(kh.k2, 0, 1e-9);
            EXPECT_NEAR(kt.h, 0, 1e-9);
            EXPECT_NEAR(kt.k1, -a * a, 1e-9);
            EXPECT_NEAR(kt.k2, 0, 1e-9);
        }
    }
}

TEST(ConeFrame, FrenetResidualsSmall) {
    const ConeCurve c = canonical_curve(GeneratorPair::from_text("sinh(t) + t/3", "cosh(t)", 1));
    for (double t : make_grid(-1, 1, 11)) EXPECT_LE(frenet_residuals(c, t).max(), 1e-8);
}

TEST(ConeFrame, SingularPairingThrows) {
    // f = g gives f g' - f' g = 0 everywhere.
    const ConeCurve c = canonical_curve(GeneratorPair::from_text("t", "t", 1));
    try {
        build_frame(c, 0.5);
        FAIL() << "expected a singular frame";
    } catch (const SingularFrame& e) {
        EXPECT_DOUBLE_EQ(e.t(), 0.5);
        EXPECT_NEAR(e.pairing(), 0, 1e-12);
    }
}

TEST(ConeFrame, UnflippedWFailsNormalization) {
    const ConeCurve c = canonical_curve(fixture(FixtureKind::Hyperbolic, 1, 2));
    FrameOptions opt;
    opt.w_sign = 1;
    const NaturalFrame f = build_frame(c, 0.3, opt);
    EXPECT_NEAR(inner(f.gamma, f.W), -1, 1e-12);
    EXPECT_NEAR(inner(build_frame(c, 0.3).gamma, build_frame(c, 0.3).W), 1, 1e-12);
}

TEST(ConeFrame, OrderValidation) {
    const ConeCurve c = canonical_curve(fixture(FixtureKind::Hyperbolic, 1, 0));
    EXPECT_THROW(frame_jets(c, 0, 0), InvalidConfig);
    EXPECT_THROW(curvature_jets(c, 0, 1), InvalidConfig);
}
