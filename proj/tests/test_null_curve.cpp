#include <gtest/gtest.h>

#include <cmath>

#include "nullcone/grid.hpp"
#include "nullcone/null_curve.hpp"

using namespace nullcone;

TEST(NullCurve, HyperbolicFixtureAtZero) {
    const ConeCurve c = canonical_curve(fixture(FixtureKind::Hyperbolic, 1, 2));
    // f = 0, g = 1/2: (f + m g, g - m f, f - m g, g + m f)
    EXPECT_EQ(c.position(0), (Vec4{1, 0.5, -1, 0.5}));
    EXPECT_TRUE(c.is_canonical());
}

TEST(NullCurve, OmegaOfFixtures) {
    for (double a : {0.5, 1.0, 2.0})
        for (double t : {-1.5, 0.0, 0.7}) {
            // cosh^2 - sinh^2 cancels, so the error scales with cosh^2(a t)
            EXPECT_NEAR(omega(fixture(FixtureKind::Hyperbolic, a, 1), t), -a / 4, 1e-15 * std::cosh(2 * a * t));
            EXPECT_NEAR(omega(fixture(FixtureKind::Trigonometric, a, 0), t), -a / 4, 1e-14);
        }
    EXPECT_NEAR(omega(GeneratorPair::from_text("cosh(t)/2", "sinh(t)/2", 0), 0.3), 0.25, 1e-14);
}

TEST(NullCurve, OmegaScalesQuadratically) {
    const auto g1 = GeneratorPair::from_text("t^2 + 1", "sin(t)", 0.5);
    const auto g3 = GeneratorPair::from_text("3*(t^2 + 1)", "3*sin(t)", 0.5);
    for (double t : {-1.0, 0.2, 1.3}) EXPECT_NEAR(omega(g3, t), 9 * omega(g1, t), 1e-12);
}

TEST(NullCurve, CanonicalCurvesAreNull) {
    const auto grid = make_grid(-2, 2, 201);
    for (auto gp : {fixture(FixtureKind::Hyperbolic, 2, 2), fixture(FixtureKind::Trigonometric, 1, 2),
                    GeneratorPair::from_text("exp(t)", "t^3 - t", 1.5)}) {
        const NullValidation v = validate_null(canonical_curve(gp), grid, 1e-12);
        EXPECT_TRUE(v.passed) << v.max_residual;
    }
}

TEST(NullCurve, NonNullControlFails) {
    const auto grid = make_grid(-2, 2, 21);
    const NullValidation v = validate_null(non_null_control(fixture(FixtureKind::Hyperbolic, 1, 2)), grid, 1e-12);
    EXPECT_FALSE(v.passed);
    EXPECT_GT(v.max_residual, 1e-3);
}

TEST(NullCurve, InvalidInputs) {
    EXPECT_THROW(fixture(FixtureKind::Hyperbolic, 0, 1), InvalidConfig);
    EXPECT_THROW(parse_fixture_kind("elliptic"), InvalidConfig);
    EXPECT_THROW(GeneratorPair::from_text("sin(", "t", 0), SyntaxError);
    EXPECT_THROW(validate_null(canonical_curve(fixture(FixtureKind::Hyperbolic, 1, 0)), {}, 1e-12), InvalidConfig);
}
