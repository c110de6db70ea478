#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nullcone/expr.hpp"
#include "nullcone/finite_difference.hpp"
#include "nullcone/grid.hpp"
#include "nullcone/verify.hpp"

using namespace nullcone;

TEST(Expr, EvaluatesWithPrecedence) {
    EXPECT_DOUBLE_EQ(evaluate(parse("2 + 3*t"), 2.0), 8);
    EXPECT_DOUBLE_EQ(evaluate(parse("-t^2"), 3.0), -9);
    EXPECT_DOUBLE_EQ(evaluate(parse("(1 - t)/4"), 3.0), -0.5);
    EXPECT_DOUBLE_EQ(evaluate(parse("t^(-1)"), 4.0), 0.25);
    EXPECT_NEAR(evaluate(parse("sin(2*t)"), 0.3), std::sin(0.6), 1e-15);
    EXPECT_NEAR(evaluate(parse("cos(pi)"), 0.0), -1, 1e-15);
    EXPECT_NEAR(evaluate(parse("sqrt(t) + exp(t) - sinh(t)*cosh(t)"), 1.0),
                1 + std::exp(1.0) - std::sinh(1.0) * std::cosh(1.0), 1e-14);
    EXPECT_DOUBLE_EQ(evaluate(parse("1.5e-1 * t"), 2.0), 0.3);
}

TEST(Expr, SyntaxErrorOffsets) {
    try {
        parse("sin(t");
        FAIL() << "expected a syntax error";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.offset(), 6u);
    }
    EXPECT_THROW(parse(""), SyntaxError);
    EXPECT_THROW(parse("2 +"), SyntaxError);
    EXPECT_THROW(parse("t^1.5"), SyntaxError);
    try {
        parse("2*foo(t)");
        FAIL() << "expected an unknown identifier";
    } catch (const UnknownIdentifier& e) {
        EXPECT_EQ(e.name(), "foo");
        EXPECT_EQ(e.offset(), 3u);
    }
}

TEST(Expr, EvaluationDomainErrors) {
    EXPECT_THROW(evaluate(parse("1/(t - 1)"), 1.0), DomainError);
    EXPECT_THROW(evaluate(parse("sqrt(t)"), -1.0), DomainError);
    EXPECT_THROW(jet_eval(parse("1/(t - 1)"), 1.0, 2), DomainError);
    EXPECT_THROW(jet_eval(parse("t"), 0.0, 5), InvalidConfig);
}

TEST(Expr, JetMatchesClosedFormDerivatives) {
    // d/dt [t^2 sin t] = 2t sin t + t^2 cos t
    const Jet j = jet_eval(parse("t^2*sin(t)"), 0.7, 2);
    EXPECT_NEAR(j.derivative(1), 2 * 0.7 * std::sin(0.7) + 0.49 * std::cos(0.7), 1e-14);
    EXPECT_NEAR(j.derivative(2), 2 * std::sin(0.7) + 4 * 0.7 * std::cos(0.7) - 0.49 * std::sin(0.7), 1e-14);
}

TEST(Expr, JetAgreesWithFiniteDifferences) {
    const Expr e = parse("exp(sin(t))/(2 + cosh(t))");
    const std::array<double, 4> h = {1e-4, 1e-3, 2e-3, 3e-3};
    for (double t : make_grid(-1, 1, 9)) {
        const Jet j = jet_eval(e, t, 4);
        for (int k = 1; k <= 4; ++k)
            EXPECT_NEAR(fd_derivative(e, t, k, h[k - 1]), j.derivative(k), 1e-6 * std::max(1.0, std::abs(j.derivative(k))))
                << "order " << k << " at t=" << t;
    }
}

TEST(Expr, PrinterRoundTripsParsedTrees) {
    for (const char* src : {"-t^2", "(1 - t)/4", "t - (2 - t)", "2/(t*3)", "sin(t)^(-2)", "-(-t)", "exp(-t)*sqrt(t + 1)"}) {
        const Expr e = parse(src);
        EXPECT_EQ(parse(to_string(e)), e) << src << " printed as " << to_string(e);
    }
}

TEST(Expr, PrinterIsAFixpointOnRandomTrees) {
    // A negative constant prints as (-c) and reparses as a negation, so the
    // fixpoint is reached after one round trip.
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        const Expr e = random_expression(rng, 4);
        const Expr back = parse(to_string(e));
        const std::string text = to_string(back);
        EXPECT_EQ(to_string(parse(text)), text);
        EXPECT_EQ(parse(text), back) << text;
        for (double t : {-0.7, 0.3}) {
            try {
                EXPECT_EQ(evaluate(back, t), evaluate(e, t)) << text;
            } catch (const DomainError&) {
                EXPECT_THROW(evaluate(back, t), DomainError) << text;
            }
        }
    }
}

TEST(Expr, ComposeMatchesDirectEvaluation) {
    const Expr f = parse("sin(t)^2");
    const Jet inner = jet_eval(parse("2*t + 1"), 0.4, 3);
    const Jet composed = jet_compose(f, inner);
    const Jet direct = jet_eval(parse("sin(2*t + 1)^2"), 0.4, 3);
    for (int k = 0; k <= 3; ++k) EXPECT_NEAR(composed.derivative(k), direct.derivative(k), 1e-13);
}

TEST(Grid, EndpointsAndSpacing) {
    const auto g = make_grid(-1, 1, 5);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_DOUBLE_EQ(g[0], -1);
    EXPECT_DOUBLE_EQ(g[2], 0);
    EXPECT_DOUBLE_EQ(g[4], 1);
    EXPECT_THROW(make_grid(0, 1, 1), InvalidConfig);
    EXPECT_THROW(make_grid(1, 1, 5), InvalidConfig);
}

TEST(FiniteDifference, Validation) {
    EXPECT_THROW(fd_derivative(parse("t"), 0, 5, 1e-3), InvalidConfig);
    EXPECT_THROW(fd_derivative(parse("t"), 0, 1, 0), InvalidConfig);
    EXPECT_NEAR(fd_derivative(parse("sin(2*t)"), 0.5, 1), 2 * std::cos(1.0), 1e-10);
}
