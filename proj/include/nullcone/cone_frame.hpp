#pragma once

// Natural Frenet frame {gamma, xi, N, W} of a curve on the lightlike cone,
// built from the P14 orthogonal null vector:
//
//   xi = gamma',  D = <perp(gamma), gamma'>,
//   N  = perp(gamma) / D,   W = -perp(gamma)' / D.
//
// The leading minus on W is what makes <gamma, W> = +1: since
// <gamma, perp(gamma)> vanishes identically, <gamma, perp(gamma)'> = -D.

#include <array>
#include <cmath>
#include <string_view>

#include "nullcone/error.hpp"
#include "nullcone/metric.hpp"
#include "nullcone/null_curve.hpp"

namespace nullcone {

inline constexpr double kDefaultSingularTol = 1e-10;

struct FrameOptions {
    PerpVariant perp = PerpVariant::P14;
    /// Sign applied to perp(gamma)'/D when forming W. -1 satisfies the frame
    /// axioms; +1 reproduces the unsigned construction recipe.
    double w_sign = -1.0;
    double singular_tol = kDefaultSingularTol;
};

struct NaturalFrame {
    double t = 0;
    Vec4 gamma, xi, N, W;
    double pairing = 0; // D = <perp(gamma), gamma'>
};

struct CurvatureTriple {
    double h = 0;
    double k1 = 0;
    double k2 = 0;
};

/// Frame fields as jets. With position order K, gamma has order K and the
/// remaining fields order K - 1.
struct FrameJets {
    Vec4Jet gamma, xi, N, W;
    Jet pairing;
};

/// Frame fields from a position jet of order >= 1.
inline FrameJets frame_jets_from_position(const Vec4Jet& gamma, double t, const FrameOptions& opt = {}) {
    FrameJets fj;
    fj.gamma = gamma;
    fj.xi = differentiate(gamma);
    const Vec4Jet p = perp(gamma, opt.perp);
    fj.pairing = inner(p, fj.xi);
    if (!(std::abs(fj.pairing.value()) > opt.singular_tol)) throw SingularFrame(t, fj.pairing.value());
    fj.N = p / fj.pairing;
    fj.W = opt.w_sign * differentiate(p) / fj.pairing;
    return fj;
}

inline FrameJets frame_jets(const ConeCurve& c, double t, int order, const FrameOptions& opt = {}) {
    if (order < 1) throw InvalidConfig("frame jets need position order >= 1");
    return frame_jets_from_position(c.jet(t, order), t, opt);
}

inline NaturalFrame build_frame(const ConeCurve& c, double t, const FrameOptions& opt = {}) {
    const FrameJets fj = frame_jets(c, t, 1, opt);
    return {t, values(fj.gamma), values(fj.xi), values(fj.N), values(fj.W), fj.pairing.value()};
}

struct CurvatureJets {
    Jet h, k1, k2;
};

/// h = <gamma'', N>, k1 = <gamma'', W>, k2 = <N', W>, as jets of order K - 2.
inline CurvatureJets curvature_jets(const FrameJets& fj) {
    const Vec4Jet acc = differentiate(fj.xi);
    const Vec4Jet dN = differentiate(fj.N);
    return {inner(acc, fj.N), inner(acc, fj.W), inner(dN, fj.W)};
}

inline CurvatureJets curvature_jets(const ConeCurve& c, double t, int order, const FrameOptions& opt = {}) {
    if (order < 2) throw InvalidConfig("curvature jets need position order >= 2");
    return curvature_jets(frame_jets(c, t, order, opt));
}

inline CurvatureTriple curvatures(const ConeCurve& c, double t, const FrameOptions& opt = {}) {
    const CurvatureJets k = curvature_jets(c, t, 2, opt);
    return {k.h.value(), k.k1.value(), k.k2.value()};
}

struct FrenetResiduals {
    double tangent = 0;      // gamma' - xi
    double acceleration = 0; // gamma'' - (h xi + k1 gamma)
    double normal = 0;       // N' - (-h N + k2 gamma - W)
    double binormal = 0;     // W' - (-k2 xi - k1 N)

    double max() const { return std::max({tangent, acceleration, normal, binormal}); }
};

inline FrenetResiduals frenet_residuals(const ConeCurve& c, double t, const FrameOptions& opt = {}) {
    const Vec4Jet pos = c.jet(t, 2);
    const FrameJets fj = frame_jets_from_position(pos, t, opt);
    const CurvatureJets kj = curvature_jets(fj);
    const double h = kj.h.value(), k1 = kj.k1.value(), k2 = kj.k2.value();
    const Vec4 gamma = values(fj.gamma), xi = values(fj.xi), N = values(fj.N), W = values(fj.W);
    const Vec4 dgamma = values(differentiate(pos));
    const Vec4 acc = values(differentiate(fj.xi));
    const Vec4 dN = values(differentiate(fj.N));
    const Vec4 dW = values(differentiate(fj.W));
    FrenetResiduals r;
    r.tangent = max_abs_diff(dgamma, xi);
    r.acceleration = max_abs_diff(acc, h * xi + k1 * gamma);
    r.normal = max_abs_diff(dN, -h * N + k2 * gamma - W);
    r.binormal = max_abs_diff(dW, -k2 * xi - k1 * N);
    return r;
}

struct GramCondition {
    std::string_view name;
    double value = 0;
    double expected = 0;

    double residual() const { return std::abs(value - expected); }
};

/// The ten pairing conditions of a natural frame: eight vanishing products
/// plus <xi, N> = <gamma, W> = 1.
inline std::array<GramCondition, 10> gram_conditions(const NaturalFrame& f) {
    return {{
        {"<gamma,gamma>", inner(f.gamma, f.gamma), 0},
        {"<gamma,xi>", inner(f.gamma, f.xi), 0},
        {"<gamma,N>", inner(f.gamma, f.N), 0},
        {"<xi,xi>", inner(f.xi, f.xi), 0},
        {"<xi,W>", inner(f.xi, f.W), 0},
        {"<xi,N>", inner(f.xi, f.N), 1},
        {"<gamma,W>", inner(f.gamma, f.W), 1},
        {"<N,N>", inner(f.N, f.N), 0},
        {"<W,W>", inner(f.W, f.W), 0},
        {"<N,W>", inner(f.N, f.W), 0},
    }};
}

inline double max_gram_residual(const NaturalFrame& f) {
    double m = 0;
    for (const auto& g : gram_conditions(f)) m = std::max(m, g.residual());
    return m;
}

} // namespace nullcone
