#pragma once

// Smarandache curves: curves whose position is a fixed combination of the
// natural frame {gamma, xi, N, W} of a canonical base curve, weighted by
// functions of t ("angles"). Seven families are provided. For each family this
// header also evaluates the published closed-form normalizer and curvature
// tables (see closed_form.hpp) and an independent definitional oracle that
// rebuilds the frame of the derived curve from its actual coordinates.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nullcone/cone_frame.hpp"
#include "nullcone/error.hpp"
#include "nullcone/expr.hpp"
#include "nullcone/finite_difference.hpp"
#include "nullcone/null_curve.hpp"

namespace nullcone {

enum class SmarandacheKind { GammaW, XiN, WN, GammaZetaN, XiNW, GammaXiW, GammaXiNW };

inline constexpr std::array<SmarandacheKind, 7> kAllKinds = {
    SmarandacheKind::GammaW,   SmarandacheKind::XiN,      SmarandacheKind::WN,       SmarandacheKind::GammaZetaN,
    SmarandacheKind::XiNW,     SmarandacheKind::GammaXiW, SmarandacheKind::GammaXiNW,
};

inline std::string_view to_string(SmarandacheKind k) {
    switch (k) {
    case SmarandacheKind::GammaW: return "gamma-w";
    case SmarandacheKind::XiN: return "xi-n";
    case SmarandacheKind::WN: return "w-n";
    case SmarandacheKind::GammaZetaN: return "gamma-zeta-n";
    case SmarandacheKind::XiNW: return "xi-n-w";
    case SmarandacheKind::GammaXiW: return "gamma-xi-w";
    case SmarandacheKind::GammaXiNW: return "gamma-xi-n-w";
    }
    return "?";
}

inline SmarandacheKind parse_kind(std::string_view s) {
    for (auto k : kAllKinds)
        if (to_string(k) == s) return k;
    throw InvalidConfig("unknown Smarandache kind '" + std::string(s) + "'");
}

/// Number of angle functions a family takes.
inline int angle_arity(SmarandacheKind k) {
    switch (k) {
    case SmarandacheKind::GammaZetaN:
    case SmarandacheKind::GammaXiW:
    case SmarandacheKind::GammaXiNW: return 2;
    default: return 1;
    }
}

/// Conventional symbols for the angle slots of each family.
inline std::array<std::string_view, 2> angle_symbols(SmarandacheKind k) {
    switch (k) {
    case SmarandacheKind::GammaW: return {"psi1", ""};
    case SmarandacheKind::XiN: return {"psi2", ""};
    case SmarandacheKind::WN: return {"psi3", ""};
    case SmarandacheKind::GammaZetaN: return {"Phi1", "Phi2"};
    case SmarandacheKind::XiNW: return {"Phi3", ""};
    case SmarandacheKind::GammaXiW:
    case SmarandacheKind::GammaXiNW: return {"omega1", "omega2"};
    }
    return {"", ""};
}

/// A point where a family's own construction degenerates (sinh(Phi2) = 0).
class KindSingularity : public DomainError {
public:
    KindSingularity(const std::string& symbol, double t)
        : DomainError("family construction degenerates (" + symbol + " = 0)", "t=" + format_double(t)),
          t_(t) {}
    double t() const noexcept { return t_; }

private:
    double t_;
};

struct AngleSet {
    std::vector<Expr> angles;

    static AngleSet from_text(const std::vector<std::string>& texts) {
        AngleSet a;
        for (const auto& s : texts) a.angles.push_back(parse(s));
        return a;
    }
};

class SmarandacheSpec {
public:
    SmarandacheSpec(ConeCurve base, SmarandacheKind kind, AngleSet angles)
        : base_(std::move(base)), kind_(kind), angles_(std::move(angles)) {
        if (!base_.is_canonical()) throw InvalidConfig("Smarandache base curve must be canonical");
        if (static_cast<int>(angles_.angles.size()) != angle_arity(kind_))
            throw InvalidConfig("kind " + std::string(to_string(kind_)) + " takes " +
                                std::to_string(angle_arity(kind_)) + " angle function(s), got " +
                                std::to_string(angles_.angles.size()));
    }

    const ConeCurve& base() const noexcept { return base_; }
    SmarandacheKind kind() const noexcept { return kind_; }
    const AngleSet& angles() const noexcept { return angles_; }
    double m() const { return base_.generators()->m; }

    /// Angle jets of the given order; unused slots are zero.
    std::array<Jet, 2> angle_jets(double t, int order) const {
        std::array<Jet, 2> out{Jet::constant(0, order), Jet::constant(0, order)};
        for (std::size_t i = 0; i < angles_.angles.size(); ++i) {
            try {
                out[i] = jet_eval(angles_.angles[i], t, order);
            } catch (const DomainError& e) {
                throw DomainError(std::string("angle ") + std::string(angle_symbols(kind_)[i]) + ": " + e.what(),
                                  "t=" + format_double(t));
            }
        }
        return out;
    }

private:
    ConeCurve base_;
    SmarandacheKind kind_;
    AngleSet angles_;
};

/// Weights of gamma, xi, N, W in the derived position.
struct FrameWeights {
    Jet gamma, xi, N, W;
};

inline FrameWeights frame_weights(SmarandacheKind kind, const std::array<Jet, 2>& a, double t) {
    const int k = std::min(a[0].order(), a[1].order());
    const Jet zero = Jet::constant(0, k);
    const double inv_sqrt2 = 1 / std::numbers::sqrt2;
    switch (kind) {
    case SmarandacheKind::GammaW: return {sinh(a[0]), zero, zero, cosh(a[0])};
    case SmarandacheKind::XiN: return {zero, sinh(a[0]), cosh(a[0]), zero};
    case SmarandacheKind::WN: return {zero, zero, sin(a[0]), cos(a[0])};
    case SmarandacheKind::GammaZetaN: {
        const Jet s = sinh(a[1]);
        if (std::abs(s.value()) <= kDefaultSingularTol) throw KindSingularity("sinh(Phi2)", t);
        return {sin(a[0]) / s, cos(a[0]) / s, cosh(a[1]) / s, zero};
    }
    case SmarandacheKind::XiNW:
        return {zero, inv_sqrt2 * sinh(a[0]), Jet::constant(inv_sqrt2, k), inv_sqrt2 * cosh(a[0])};
    case SmarandacheKind::GammaXiW:
        return {sinh(a[0]) * sin(a[1]), sinh(a[0]) * cos(a[1]), zero, cosh(a[0])};
    case SmarandacheKind::GammaXiNW:
        return {inv_sqrt2 * sinh(a[0]), inv_sqrt2 * sinh(a[1]), inv_sqrt2 * cosh(a[1]), inv_sqrt2 * cosh(a[0])};
    }
    throw InvalidConfig("unknown kind");
}

/// Derived position as a jet of order `order` (at most kMaxJetOrder - 1,
/// since the base frame costs one derivative).
inline Vec4Jet position_jet(const SmarandacheSpec& spec, double t, int order, const FrameOptions& opt = {}) {
    if (order < 0 || order > kMaxJetOrder - 1)
        throw InvalidConfig("derived position order must lie in [0, " + std::to_string(kMaxJetOrder - 1) + "]");
    const FrameJets fj = frame_jets(spec.base(), t, order + 1, opt);
    const FrameWeights w = frame_weights(spec.kind(), spec.angle_jets(t, order + 1), t);
    return w.gamma * fj.gamma + w.xi * fj.xi + w.N * fj.N + w.W * fj.W;
}

inline Vec4 smarandache_curve(const SmarandacheSpec& spec, double t) { return values(position_jet(spec, t, 0)); }

/// The derived curve as a ConeCurve (no generators: it is not canonical).
inline ConeCurve derived_curve(const SmarandacheSpec& spec) {
    return ConeCurve(std::string(to_string(spec.kind())) + "(" + spec.base().label() + ")",
                     [spec](double t, int order) { return position_jet(spec, t, order); });
}

struct DerivedTangent {
    Vec4 tangent;
    double norm2 = 0; // <tangent, tangent>
};

inline DerivedTangent derived_tangent(const SmarandacheSpec& spec, double t) {
    const Vec4 v = values(differentiate(position_jet(spec, t, 1)));
    return {v, inner(v, v)};
}

/// Finite-difference tangent of the sampled position; shares no derivative
/// code with derived_tangent beyond the position itself.
inline DerivedTangent fd_tangent(const SmarandacheSpec& spec, double t, double h) {
    const Vec4 v = central_derivative([&](double x) { return smarandache_curve(spec, x); }, t, 1, h);
    return {v, inner(v, v)};
}

/// Tangent predicted by expanding the derivative of the frame combination
/// with the Frenet equations of the base curve.
inline Vec4 frenet_expanded_tangent(const SmarandacheSpec& spec, double t) {
    const FrameJets fj = frame_jets(spec.base(), t, 2);
    const CurvatureJets kj = curvature_jets(fj);
    const double h = kj.h.value(), k1 = kj.k1.value(), k2 = kj.k2.value();
    const FrameWeights w = frame_weights(spec.kind(), spec.angle_jets(t, 1), t);
    const Vec4 g = values(fj.gamma), xi = values(fj.xi), N = values(fj.N), W = values(fj.W);
    const double cg = w.gamma.value(), cx = w.xi.value(), cn = w.N.value(), cw = w.W.value();
    const double dg = w.gamma.derivative(1), dx = w.xi.derivative(1), dn = w.N.derivative(1),
                 dw = w.W.derivative(1);
    return dg * g + dx * xi + dn * N + dw * W + cg * xi + cx * (h * xi + k1 * g) + cn * (-h * N + k2 * g - W) +
           cw * (-k2 * xi - k1 * N);
}

struct OracleResult {
    CurvatureTriple curvatures;
    NaturalFrame frame;
    std::array<GramCondition, 10> gram;
};

/// Curvatures of an arbitrary curve from the definitional frame recipe:
/// N = perp(c)/D, W = -perp(c)'/D, h = <c'', N>, k1 = <c'', W>, k2 = <N', W>.
/// The frame conditions are reported as computed; for curves that are not
/// null-positioned several of them fail.
inline OracleResult oracle_curvatures_of(const ConeCurve& c, double t, const FrameOptions& opt = {}) {
    const FrameJets fj = frame_jets(c, t, 3, opt);
    const CurvatureJets kj = curvature_jets(fj);
    OracleResult r{{kj.h.value(), kj.k1.value(), kj.k2.value()},
                   {t, values(fj.gamma), values(fj.xi), values(fj.N), values(fj.W), fj.pairing.value()},
                   {}};
    r.gram = gram_conditions(r.frame);
    return r;
}

inline OracleResult oracle_curvatures(const SmarandacheSpec& spec, double t, const FrameOptions& opt = {}) {
    return oracle_curvatures_of(derived_curve(spec), t, opt);
}

} // namespace nullcone
