#include <gtest/gtest.h>

#include <cmath>

#include "nullcone/grid.hpp"
#include "nullcone/closed_form.hpp"

using namespace nullcone;

namespace {
SmarandacheSpec make(SmarandacheKind k, std::vector<std::string> angles, double a = 1, double m = 2) {
    return SmarandacheSpec(canonical_curve(fixture(FixtureKind::Hyperbolic, a, m)), k, AngleSet::from_text(angles));
}
} // namespace

TEST(ClosedForm, GammaWNormalizer) {
    for (auto mode : {FormulaMode::Literal, FormulaMode::Corrected})
        for (double t : {-0.5, 0.0, 0.9}) {
            EXPECT_NEAR(paper_normalizer(make(SmarandacheKind::GammaW, {"t"}), t, mode), 0, 1e-12);
            EXPECT_NEAR(paper_normalizer(make(SmarandacheKind::GammaW, {"2*t"}), t, mode), -3, 1e-12);
        }
}

TEST(ClosedForm, NormalizerDisagreesWithTangentNorm) {
    // The printed radicand is constant -3 while the actual tangent norm^2 is 3 sinh 4t.
    const auto spec = make(SmarandacheKind::GammaW, {"2*t"});
    const double t = 0.5;
    EXPECT_NEAR(derived_tangent(spec, t).norm2, 3 * std::sinh(4 * t), 1e-10);
    EXPECT_GT(std::abs(paper_normalizer(spec, t, FormulaMode::Literal) - derived_tangent(spec, t).norm2), 1);
}

TEST(ClosedForm, NegativeRadicandRaises) {
    try {
        paper_curvatures(make(SmarandacheKind::GammaW, {"2*t"}), 0.3, FormulaMode::Literal);
        FAIL() << "expected a negative radicand";
    } catch (const NegativeRadicand& e) {
        EXPECT_NEAR(e.radicand(), -3, 1e-12);
    }
    EXPECT_NEAR(paper_normalizer(make(SmarandacheKind::XiN, {"2*t"}), 0.4, FormulaMode::Literal), -3, 1e-12);
}

TEST(ClosedForm, WNNormalizer) {
    const auto spec = make(SmarandacheKind::WN, {"t"});
    for (double t : {-1.0, 0.3, 1.2})
        EXPECT_NEAR(paper_normalizer(spec, t, FormulaMode::Literal), 4 * std::sin(t) * std::sin(t), 1e-12);
}

TEST(ClosedForm, DenominatorZero) {
    const auto xinw = make(SmarandacheKind::XiNW, {"0"});
    EXPECT_NEAR(paper_normalizer(xinw, 0.2, FormulaMode::Literal), 1, 1e-12);
    try {
        paper_curvatures(xinw, 0.2, FormulaMode::Literal);
        FAIL() << "expected a vanishing denominator";
    } catch (const DenominatorZero& e) {
        EXPECT_NE(std::string(e.what()).find("Phi3'"), std::string::npos) << e.what();
    }
    try {
        paper_curvatures(make(SmarandacheKind::GammaXiNW, {"t", "t"}), 0.2, FormulaMode::Literal);
        FAIL() << "expected a vanishing denominator";
    } catch (const DenominatorZero& e) {
        EXPECT_NE(std::string(e.what()).find("Omega7"), std::string::npos) << e.what();
    }
}

TEST(ClosedForm, LinearReadoutOfZeroIsZero) {
    LinearReadout r;
    r.h_weights = {1, 2, 3, 4};
    r.k1_weights = {-1, 0.5, 2, 7};
    const auto [h, k1] = r.apply({0, 0, 0, 0});
    EXPECT_EQ(h, 0);
    EXPECT_EQ(k1, 0);
    const auto [h2, k12] = r.apply({1, 0, 0, 1});
    EXPECT_EQ(h2, 5);
    EXPECT_EQ(k12, 6);
}

TEST(ClosedForm, OmegaRecords) {
    const double t = 0.4;
    const OmegaRecord gw = omega_record(make(SmarandacheKind::GammaW, {"2*t"}), t);
    ASSERT_TRUE(gw.printed);
    EXPECT_NEAR(*gw.printed, -0.5, 1e-14);
    EXPECT_NEAR(gw.generators, -0.5, 1e-14);
    const OmegaRecord xw = omega_record(make(SmarandacheKind::GammaXiW, {"t", "t/2 + 0.3"}), t);
    ASSERT_TRUE(xw.printed);
    EXPECT_NEAR(*xw.printed, 2 * xw.generators, 1e-12);
    EXPECT_FALSE(omega_record(make(SmarandacheKind::GammaZetaN, {"t", "t + 3"}), t).printed);
}

TEST(ClosedForm, FiniteTripleWhereNormalizerIsReal) {
    const ClosedFormEvaluation e = paper_curvatures(make(SmarandacheKind::GammaW, {"2*t"}, 2), 0.25, FormulaMode::Literal);
    EXPECT_GT(e.radicand, 0);
    EXPECT_TRUE(std::isfinite(e.curvatures.h));
    EXPECT_TRUE(std::isfinite(e.curvatures.k1));
    EXPECT_TRUE(std::isfinite(e.curvatures.k2));
    EXPECT_FALSE(e.coefficients.empty());
    EXPECT_EQ(e.coefficients.front().first, "M1^2");
}

TEST(ClosedForm, K2VanishesOnCanonicalCurves) {
    // k2 = <N', W> reduces to <gamma', gamma'> / D^2, so every correction
    // weighted by k2 is inert.
    for (auto gp : {GeneratorPair::from_text("exp(t/3)", "cos(t) + 2", 1), GeneratorPair::from_text("t", "t^2 + 1", 0)})
        for (double t : {0.3, 0.6}) EXPECT_NEAR(curvatures(canonical_curve(gp), t).k2, 0, 1e-12);
}

TEST(ClosedForm, GammaWCorrectionsAreInert) {
    // The sin(2 h psi) term carries a factor k2 = 0, and the psi'' ratio
    // cancels out of k2, so both modes agree.
    const auto spec = make(SmarandacheKind::GammaW, {"t^2 + t"}, 2);
    const ClosedFormEvaluation lit = paper_curvatures(spec, 0.5, FormulaMode::Literal);
    const ClosedFormEvaluation cor = paper_curvatures(spec, 0.5, FormulaMode::Corrected);
    EXPECT_EQ(lit.radicand, cor.radicand);
    EXPECT_NEAR(lit.curvatures.k2, cor.curvatures.k2, 1e-12);
}

TEST(ClosedForm, ModesDifferWhereCorrectionsApply) {
    // w-n flips the sign of the M3'/M3 lead term.
    const auto spec = make(SmarandacheKind::WN, {"t"}, 2);
    const ClosedFormEvaluation lit = paper_curvatures(spec, 0.5, FormulaMode::Literal);
    const ClosedFormEvaluation cor = paper_curvatures(spec, 0.5, FormulaMode::Corrected);
    EXPECT_GT(std::abs(lit.curvatures.h - cor.curvatures.h), 1e-3);
    EXPECT_EQ(parse_formula_mode("corrected"), FormulaMode::Corrected);
    EXPECT_THROW(parse_formula_mode("both"), InvalidConfig);
}
