#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nullcone/grid.hpp"
#include "nullcone/smarandache.hpp"

using namespace nullcone;

namespace {
ConeCurve worked_base() { return canonical_curve(fixture(FixtureKind::Hyperbolic, 1, 2)); }

SmarandacheSpec make(SmarandacheKind k, std::vector<std::string> angles, ConeCurve base = worked_base()) {
    return SmarandacheSpec(std::move(base), k, AngleSet::from_text(angles));
}
} // namespace

TEST(Smarandache, KindNamesRoundTrip) {
    for (auto k : kAllKinds) EXPECT_EQ(parse_kind(to_string(k)), k);
    EXPECT_THROW(parse_kind("gamma-n"), InvalidConfig);
    EXPECT_EQ(angle_arity(SmarandacheKind::GammaZetaN), 2);
    EXPECT_EQ(angle_arity(SmarandacheKind::GammaXiW), 2);
    EXPECT_EQ(angle_arity(SmarandacheKind::GammaXiNW), 2);
    EXPECT_EQ(angle_arity(SmarandacheKind::WN), 1);
}

TEST(Smarandache, CollapseAtZeroAngle) {
    const ConeCurve base = worked_base();
    for (double t : make_grid(-2, 2, 21)) {
        const NaturalFrame f = build_frame(base, t);
        const Vec4 nw = (f.N + f.W) / std::numbers::sqrt2;
        EXPECT_LE(max_abs_diff(smarandache_curve(make(SmarandacheKind::GammaW, {"0"}), t), f.W), 1e-12);
        EXPECT_LE(max_abs_diff(smarandache_curve(make(SmarandacheKind::XiN, {"0"}), t), f.N), 1e-12);
        EXPECT_LE(max_abs_diff(smarandache_curve(make(SmarandacheKind::WN, {"0"}), t), f.W), 1e-12);
        EXPECT_LE(max_abs_diff(smarandache_curve(make(SmarandacheKind::XiNW, {"0"}), t), nw), 1e-12);
        EXPECT_LE(max_abs_diff(smarandache_curve(make(SmarandacheKind::GammaXiNW, {"0", "0"}), t), nw), 1e-12);
    }
}

TEST(Smarandache, GammaWPositionNorm) {
    // <sinh(psi) gamma + cosh(psi) W, same> = 2 sinh(psi) cosh(psi) <gamma, W> = sinh(2 psi)
    const auto spec = make(SmarandacheKind::GammaW, {"t"});
    for (double t : {-1.0, 0.25, 0.8}) {
        const Vec4 p = smarandache_curve(spec, t);
        EXPECT_NEAR(inner(p, p), std::sinh(2 * t), 1e-12);
    }
}

TEST(Smarandache, GammaWTangentNorms) {
    const auto null_spec = make(SmarandacheKind::GammaW, {"t"});
    const auto spec = make(SmarandacheKind::GammaW, {"2*t"});
    for (double t : make_grid(-2, 2, 21)) {
        EXPECT_NEAR(derived_tangent(null_spec, t).norm2, 0, 1e-9);
        const double want = 3 * std::sinh(4 * t);
        EXPECT_NEAR(fd_tangent(spec, t, 1e-4 * std::max(1.0, std::abs(t))).norm2, want,
                    1e-6 * std::max(1.0, std::abs(want)));
    }
    EXPECT_NEAR(derived_tangent(spec, 0.5).norm2, 3 * std::sinh(2.0), 1e-10);
}

TEST(Smarandache, TangentThreeWays) {
    for (auto k : kAllKinds) {
        std::vector<std::string> angles = {"t"};
        if (angle_arity(k) == 2) angles = {"t", "t + 3"};
        const auto spec = make(k, angles);
        for (double t : {-0.9, 0.1, 0.6}) {
            const Vec4 jt = derived_tangent(spec, t).tangent;
            EXPECT_LE(max_abs_diff(jt, frenet_expanded_tangent(spec, t)), 1e-9) << to_string(k);
            EXPECT_LE(max_abs_diff(jt, fd_tangent(spec, t, 1e-4).tangent), 1e-6 * std::max(1.0, max_abs_diff(jt, Vec4{}))) << to_string(k);
        }
    }
}

TEST(Smarandache, OracleReproducesBaseCurvatures) {
    const ConeCurve base = worked_base();
    for (double t : {-1.0, 0.0, 1.0}) {
        const CurvatureTriple a = curvatures(base, t), b = oracle_curvatures_of(base, t).curvatures;
        EXPECT_NEAR(a.h, b.h, 1e-10);
        EXPECT_NEAR(a.k1, b.k1, 1e-10);
        EXPECT_NEAR(a.k2, b.k2, 1e-10);
    }
}

TEST(Smarandache, TamperedPerpIsSingular) {
    FrameOptions opt;
    opt.perp = PerpVariant::P13;
    EXPECT_THROW(oracle_curvatures_of(worked_base(), 0.4, opt), SingularFrame);
}

TEST(Smarandache, ZetaSingularity) {
    const auto spec = make(SmarandacheKind::GammaZetaN, {"t", "t"});
    EXPECT_THROW(smarandache_curve(spec, 0), KindSingularity);
    EXPECT_NO_THROW(smarandache_curve(spec, 0.5));
}

TEST(Smarandache, SpecValidation) {
    EXPECT_THROW(make(SmarandacheKind::GammaW, {"t", "t"}), InvalidConfig);
    EXPECT_THROW(make(SmarandacheKind::GammaXiW, {"t"}), InvalidConfig);
    EXPECT_THROW(make(SmarandacheKind::GammaW, {"t"}, non_null_control(fixture(FixtureKind::Hyperbolic, 1, 2))),
                 InvalidConfig);
    EXPECT_THROW(make(SmarandacheKind::GammaW, {""}), SyntaxError);
    EXPECT_THROW(position_jet(make(SmarandacheKind::GammaW, {"t"}), 0, 4), InvalidConfig);
}

TEST(Smarandache, AngleDomainErrorNamesSymbol) {
    const auto spec = make(SmarandacheKind::WN, {"sqrt(t)"});
    try {
        smarandache_curve(spec, -1);
        FAIL() << "expected a domain error";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("psi3"), std::string::npos) << e.what();
    }
}
