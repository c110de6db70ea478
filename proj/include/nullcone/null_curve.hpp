#pragma once

// Null curves on the lightlike cone in canonical generator-pair form
//
//   gamma = (f + m g, g - m f, f - m g, g + m f),   m constant,
//
// which is null-positioned and null-tangent for every choice of f and g.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullcone/error.hpp"
#include "nullcone/expr.hpp"
#include "nullcone/format.hpp"
#include "nullcone/metric.hpp"

namespace nullcone {

struct GeneratorPair {
    Expr f;
    Expr g;
    double m = 0;

    static GeneratorPair from_text(std::string_view f, std::string_view g, double m) {
        if (!std::isfinite(m)) throw InvalidInput("m must be finite");
        return {parse(f), parse(g), m};
    }
};

/// A curve in E^4_2 evaluated as jets. Canonical curves carry their generators.
class ConeCurve {
public:
    using Evaluator = std::function<Vec4Jet(double t, int order)>;
    using ExtendedJet = BasicVec4<BasicJet<long double>>;
    using ExtendedEvaluator = std::function<ExtendedJet(long double t, int order)>;

    ConeCurve(std::string label, Evaluator eval, std::optional<GeneratorPair> generators = std::nullopt,
              ExtendedEvaluator extended = {})
        : label_(std::move(label)), eval_(std::move(eval)), extended_(std::move(extended)),
          generators_(std::move(generators)) {}

    Vec4Jet jet(double t, int order) const { return eval_(t, order); }
    Vec4 position(double t) const { return values(eval_(t, 0)); }

    /// Extended-precision evaluation, when the curve provides one. Rounding
    /// of the double components alone leaves |<gamma, gamma>| near 1e-12 once
    /// the components reach ~40; the extended path resolves the identity.
    bool has_extended() const noexcept { return static_cast<bool>(extended_); }
    ExtendedJet jet_extended(long double t, int order) const { return extended_(t, order); }

    const std::string& label() const noexcept { return label_; }
    bool is_canonical() const noexcept { return generators_.has_value(); }
    const std::optional<GeneratorPair>& generators() const noexcept { return generators_; }

private:
    std::string label_;
    Evaluator eval_;
    ExtendedEvaluator extended_;
    std::optional<GeneratorPair> generators_;
};

namespace detail {

template <class T = double>
std::pair<BasicJet<T>, BasicJet<T>> generator_jets(const GeneratorPair& gp, T t, int order) {
    auto eval = [&](const Expr& e, const char* name) {
        try {
            return jet_eval<T>(e, t, order);
        } catch (const DomainError& err) {
            throw DomainError(std::string("generator ") + name + ": " + err.what(),
                              "t=" + format_double(static_cast<double>(t)));
        }
    };
    return {eval(gp.f, "f"), eval(gp.g, "g")};
}

template <class T>
BasicVec4<BasicJet<T>> canonical_position(const GeneratorPair& gp, T t, int order) {
    auto [f, g] = generator_jets<T>(gp, t, order);
    const T m = gp.m;
    return {f + m * g, g - m * f, f - m * g, g + m * f};
}

} // namespace detail

inline ConeCurve canonical_curve(const GeneratorPair& gp) {
    return ConeCurve("canonical(f=" + to_string(gp.f) + ", g=" + to_string(gp.g) + ", m=" + format_double(gp.m) + ")",
                     [gp](double t, int order) { return detail::canonical_position<double>(gp, t, order); }, gp,
                     [gp](long double t, int order) { return detail::canonical_position<long double>(gp, t, order); });
}

/// Negative control: the first component f + m g replaced by f + 2 m g, which
/// breaks nullity whenever m g != 0.
inline ConeCurve non_null_control(const GeneratorPair& gp) {
    auto eval = [gp](double t, int order) {
        auto [f, g] = detail::generator_jets<double>(gp, t, order);
        const double m = gp.m;
        return Vec4Jet{f + 2 * m * g, g - m * f, f - m * g, g + m * f};
    };
    return ConeCurve("non-null-control", eval);
}

/// Omega = f g' - f' g.
inline double omega(const GeneratorPair& gp, double t) {
    auto [f, g] = detail::generator_jets<double>(gp, t, 1);
    return f.value() * g.derivative(1) - f.derivative(1) * g.value();
}

struct NullResidual {
    double t = 0;
    double position = 0; // |<gamma, gamma>|
    double tangent = 0;  // |<gamma', gamma'>|
    std::optional<std::string> error;
};

struct NullValidation {
    std::vector<NullResidual> points;
    bool passed = false;
    double max_residual = 0;
};

/// Evaluation failures are recorded per point and count as failures.
inline NullValidation validate_null(const ConeCurve& c, const std::vector<double>& grid, double tol) {
    if (grid.empty()) throw InvalidConfig("grid must be nonempty");
    if (!(tol > 0)) throw InvalidConfig("tolerance must be positive");
    NullValidation out;
    out.passed = true;
    for (double t : grid) {
        NullResidual r{t, 0, 0, std::nullopt};
        try {
            if (c.has_extended()) {
                const auto p = c.jet_extended(t, 1);
                const auto q = [](const BasicVec4<BasicJet<long double>>& v, int d) {
                    std::array<long double, 4> x;
                    for (std::size_t i = 0; i < 4; ++i) x[i] = v[i].derivative(d);
                    return -x[0] * x[0] - x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
                };
                r.position = static_cast<double>(std::abs(q(p, 0)));
                r.tangent = static_cast<double>(std::abs(q(p, 1)));
            } else {
                const Vec4Jet p = c.jet(t, 1);
                const Vec4 x = values(p);
                const Vec4 v = values(differentiate(p));
                r.position = std::abs(inner(x, x));
                r.tangent = std::abs(inner(v, v));
            }
            out.max_residual = std::max({out.max_residual, r.position, r.tangent});
            if (r.position > tol || r.tangent > tol) out.passed = false;
        } catch (const Error& e) {
            r.error = e.what();
            out.passed = false;
        }
        out.points.push_back(std::move(r));
    }
    return out;
}

enum class FixtureKind { Hyperbolic, Trigonometric };

inline std::string_view to_string(FixtureKind k) {
    return k == FixtureKind::Hyperbolic ? "hyperbolic" : "trigonometric";
}

inline FixtureKind parse_fixture_kind(std::string_view s) {
    if (s == "hyperbolic") return FixtureKind::Hyperbolic;
    if (s == "trigonometric") return FixtureKind::Trigonometric;
    throw InvalidConfig("unknown fixture '" + std::string(s) + "' (expected hyperbolic or trigonometric)");
}

/// Hyperbolic(a): f = sinh(a t)/2, g = cosh(a t)/2.
/// Trigonometric(a): f = sin(a t)/2, g = cos(a t)/2.
inline GeneratorPair fixture(FixtureKind kind, double a, double m) {
    if (a == 0 || !std::isfinite(a)) throw InvalidConfig("fixture parameter a must be finite and nonzero");
    const std::string arg = "(" + format_double(a) + "*t)";
    const bool hyp = kind == FixtureKind::Hyperbolic;
    return GeneratorPair::from_text((hyp ? "sinh" : "sin") + arg + "/2", (hyp ? "cosh" : "cos") + arg + "/2", m);
}

} // namespace nullcone
