#pragma once

// Published closed-form normalizers and curvatures of the seven Smarandache
// families, evaluated over jets so every prime is an exact derivative.
//
// Literal mode transcribes the tables exactly as printed, including the terms
// that look like typesetting slips. Corrected mode applies the fixes listed in
// kCorrections. A handful of printed symbols are unreadable as written (an
// index pointing at the wrong family, a missing operator); those get one
// reading in both modes, listed in kInterpretations.
//
// Every family reads h and k1 as linear forms in four coefficients (the
// "b-type" table); LinearReadout keeps those weights so the forms can be
// exercised on their own.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nullcone/cone_frame.hpp"
#include "nullcone/error.hpp"
#include "nullcone/smarandache.hpp"

namespace nullcone {

enum class FormulaMode { Literal, Corrected };

inline std::string_view to_string(FormulaMode m) { return m == FormulaMode::Literal ? "literal" : "corrected"; }

inline FormulaMode parse_formula_mode(std::string_view s) {
    if (s == "literal") return FormulaMode::Literal;
    if (s == "corrected") return FormulaMode::Corrected;
    throw InvalidConfig("unknown formula mode '" + std::string(s) + "' (expected literal or corrected)");
}

struct Correction {
    std::string_view kind;
    std::string_view printed;
    std::string_view corrected;
};

inline constexpr std::array<Correction, 7> kCorrections = {{
    {"gamma-w", "M1^2 term k2*sin(2*h*psi1)", "k2*sinh(2*psi1)"},
    {"gamma-w", "n-table ratio psi1''/psi1^2", "psi1''/psi1'^2"},
    {"w-n", "a-table leading term +M3'/M3 * b_i", "-M3'/M3 * b_i"},
    {"gamma-zeta-n", "n_i' = (-h_i*Omega4'/Omega4^2 + h_i'/Omega4)/(2(1+m^2)Omega4)", "exact derivative of n_i"},
    {"gamma-xi-w", "M6^2 last term G3'", "G3'^2"},
    {"gamma-xi-w", "Omega6 = (-omega1'(sin(omega2)+cos(omega2)) - omega2'(cos(omega2)-sin(omega2))sinh(2omega1)/2)/2",
     "f g' - f' g, which is half the printed value"},
    {"gamma-xi-n-w", "c1 term alpha3*k2", "b3*k2"},
}};

inline constexpr std::array<Correction, 4> kInterpretations = {{
    {"w-n", "h denominator psi2'", "psi3'"},
    {"gamma-zeta-n", "k2 fourth product has no operator", "added with +"},
    {"gamma-xi-w", "n_i denominator Omega5", "Omega6"},
    {"gamma-xi-n-w", "b_i = a_i / M7", "alpha_i / M7"},
}};

/// Denominators smaller than this in magnitude raise DenominatorZero.
inline constexpr double kDenominatorTol = 1e-12;

/// h and k1 as linear forms in the family's b-type coefficients.
struct LinearReadout {
    std::array<double, 4> h_weights{};
    std::array<double, 4> k1_weights{};

    std::pair<double, double> apply(const std::array<double, 4>& b) const {
        double h = 0, k1 = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            h += h_weights[i] * b[i];
            k1 += k1_weights[i] * b[i];
        }
        return {h, k1};
    }
};

struct ClosedFormEvaluation {
    CurvatureTriple curvatures;
    double radicand = 0;
    std::array<double, 4> b{};
    LinearReadout readout;
    std::vector<std::pair<std::string, double>> coefficients;
};

/// Printed Omega_k next to f g' - f' g of the generator pair the family's
/// normal vector is read from.
struct OmegaRecord {
    std::optional<double> printed;
    double generators = 0;
};

namespace closed_form {

struct Context {
    Jet h, k1, k2;             // base curvatures, order 2
    std::array<Jet, 2> angle;  // order kMaxJetOrder
    double m = 0;
    FormulaMode mode = FormulaMode::Literal;
    double t = 0;
    std::vector<std::pair<std::string, double>>* log = nullptr;

    bool literal() const { return mode == FormulaMode::Literal; }
    double mm() const { return 1 + m * m; }
    void put(std::string name, const Jet& v) const {
        if (log) log->emplace_back(std::move(name), v.value());
    }
};

inline Jet d(const Jet& x) { return x.differentiate(); }

inline const Jet& nonzero(const Jet& den, const char* symbol) {
    if (!(std::abs(den.value()) > kDenominatorTol)) throw DenominatorZero(symbol);
    return den;
}

inline Jet over(const Jet& num, const Jet& den, const char* symbol) { return num / nonzero(den, symbol); }

inline Jet root(const Jet& radicand, const char* symbol) {
    if (!(radicand.value() > 0)) throw NegativeRadicand(symbol, radicand.value());
    return sqrt(radicand);
}

inline double sq(double x) { return x * x; }

inline Context make_context(const SmarandacheSpec& spec, double t, FormulaMode mode) {
    const CurvatureJets k = curvature_jets(spec.base(), t, kMaxJetOrder);
    return {k.h, k.k1, k.k2, spec.angle_jets(t, kMaxJetOrder), spec.m(), mode, t, nullptr};
}

// ---- gamma-w --------------------------------------------------------------

inline Jet radicand_gamma_w(const Context& c) {
    const Jet& psi = c.angle[0];
    const Jet p = d(psi), s = sinh(psi), ch = cosh(psi);
    const Jet tail = c.literal() ? c.k2 * sin(2.0 * c.h * psi) : c.k2 * sinh(2.0 * psi);
    return -(p * p) + (c.k1 * c.k1 - c.k2 * c.k2) * ch * ch - s * s + tail;
}

inline ClosedFormEvaluation eval_gamma_w(const Context& c) {
    ClosedFormEvaluation out;
    const Jet& psi = c.angle[0];
    const Jet p = d(psi), q = d(p), s = sinh(psi), ch = cosh(psi);
    const double m = c.m, mm = c.mm();
    const Jet R = radicand_gamma_w(c);
    out.radicand = R.value();
    c.put("M1^2", R);
    const Jet M = root(R, "M1");
    const Jet a1 = p * ch / M, a2 = (s - c.k2 * ch) / M, a3 = -(c.k1 * ch) / M, a4 = p * s / M;
    const Jet b1 = (d(a1) + a2 * c.k1 + c.k2 * a3) / M;
    const Jet b2 = (d(a2) + a1 + a2 * c.h - c.k2 * a4) / M;
    const Jet b3 = (d(a3) - a3 * c.h - c.k1 * a4) / M;
    const Jet b4 = (-a3 + d(a4)) / M;
    for (auto [n, v] : {std::pair{"a1", &a1}, {"a2", &a2}, {"a3", &a3}, {"a4", &a4}, {"b1", &b1}, {"b2", &b2},
                        {"b3", &b3}, {"b4", &b4}})
        c.put(n, *v);

    const double sv = s.value(), cv = ch.value(), pv = p.value();
    nonzero(p, "psi1'");
    const double hs = -1 / (mm * pv);
    out.readout.h_weights = {-hs * (cv - m * sv), hs * (sv + m * cv), -hs * (cv + m * sv), hs * (sv - m * cv)};
    out.readout.k1_weights = {-(sv - m * cv) / mm, (cv + m * sv) / mm, -(sv + m * cv) / mm, (cv - m * sv) / mm};
    out.b = {b1.value(), b2.value(), b3.value(), b4.value()};
    std::tie(out.curvatures.h, out.curvatures.k1) = out.readout.apply(out.b);

    const Jet r = c.literal() ? over(q, psi * psi, "psi1^2") : over(q, p * p, "psi1'^2");
    const double rv = r.value();
    const double n1 = -(rv * (cv - m * sv) + sv - m * cv) / mm;
    const double n2 = (rv * (sv + m * cv) + cv + m * sv) / mm;
    const double n3 = (rv * (cv + m * sv) + sv + m * cv) / mm;
    const double n4 = -(rv * (sv - m * cv) + cv - m * sv) / mm;
    c.put("n1", Jet::constant(n1, 0));
    c.put("n2", Jet::constant(n2, 0));
    c.put("n3", Jet::constant(n3, 0));
    c.put("n4", Jet::constant(n4, 0));
    out.curvatures.k2 = -(-n1 * (sv - m * cv) + n2 * (cv + m * sv) - n3 * (sv + m * cv) + n4 * (cv - m * sv)) / mm;
    return out;
}

// ---- xi-n -----------------------------------------------------------------

inline Jet radicand_xi_n(const Context& c) {
    const Jet& psi = c.angle[0];
    const Jet p = d(psi), s = sinh(psi), ch = cosh(psi);
    return -(c.k1 * c.k1 * s * s) + (1.0 - c.k2 * c.k2) * ch * ch - p * p + c.h * c.h -
           sinh(2.0 * psi) * (c.k1 * c.k2 + 2.0 * p * c.h);
}

inline ClosedFormEvaluation eval_xi_n(const Context& c) {
    ClosedFormEvaluation out;
    const Jet& psi = c.angle[0];
    const Jet p = d(psi), q = d(p), s = sinh(psi), ch = cosh(psi);
    const double m = c.m, mm = c.mm();
    const Jet R = radicand_xi_n(c);
    out.radicand = R.value();
    c.put("M2^2", R);
    const Jet M = root(R, "M2");
    const Jet M2 = M * M, M3 = M2 * M, dM = d(M);
    const Jet a1 = c.k1 * s + c.k2 * ch, a2 = p * ch + c.h * s, a3 = p * s - c.h * ch;
    const Jet n1 = (-(dM / M) * a1 + d(a1) + a2 * c.k1 + a3 * c.k2) / M2;
    const Jet n2 = -(dM / M3) * a2 + (a1 + d(a2) + c.h * a2 + c.k2 * ch) / M2;
    const Jet n3 = -(dM / M3) * a3 + (d(a3) - c.h * a3 + c.k1 * ch) / M2;
    const Jet n4 = -(p * s + a3) / M2;
    for (auto [n, v] : {std::pair{"a1", &a1}, {"a2", &a2}, {"a3", &a3}, {"n1", &n1}, {"n2", &n2}, {"n3", &n3},
                        {"n4", &n4}})
        c.put(n, *v);

    const double sv = s.value(), cv = ch.value(), pv = p.value();
    nonzero(p, "psi2'");
    const double hs = 1 / (mm * pv);
    out.readout.h_weights = {-hs * (sv - m * cv), hs * (cv + m * sv), -hs * (cv + m * sv), hs * (sv - m * cv)};
    out.readout.k1_weights = {(cv - m * sv) / mm, (-sv - m * cv) / mm, (cv + m * sv) / mm, -(sv - m * cv) / mm};
    out.b = {n1.value(), n2.value(), n3.value(), n4.value()};
    std::tie(out.curvatures.h, out.curvatures.k1) = out.readout.apply(out.b);

    const double rv = over(q, p * p, "psi2'^2").value();
    const double u1 = (-rv * (sv - m * cv) + cv - m * sv) / mm;
    const double u2 = (rv * (cv + m * sv) - sv - m * cv) / mm;
    const double u3 = (rv * (sv + m * cv) - cv - m * sv) / mm;
    const double u4 = (-rv * (cv - m * sv) + sv - m * cv) / mm;
    out.curvatures.k2 = -(-u1 * (cv - m * sv) + u2 * (sv + m * cv) - u3 * (cv + m * sv) + u4 * (sv - m * cv)) / mm;
    return out;
}

// ---- w-n ------------------------------------------------------------------

inline Jet radicand_w_n(const Context& c) {
    const Jet& psi = c.angle[0];
    const Jet p = d(psi), s = sin(psi), co = cos(psi);
    return -(c.k2 * c.k2) + s * s * (c.h * c.h + (1.0 + p) * (1.0 + p)) + co * co * (p - c.k1) * (p - c.k1) -
           c.h * (p - c.k1) * sin(2.0 * psi);
}

inline ClosedFormEvaluation eval_w_n(const Context& c) {
    ClosedFormEvaluation out;
    const Jet& psi = c.angle[0];
    const Jet p = d(psi), q = d(p), s = sin(psi), co = cos(psi);
    const double m = c.m, mm = c.mm();
    const Jet b1 = c.k2 * s, b2 = -(c.k2 * co), b3 = (p - c.k1) * co - c.h * s, b4 = -((1.0 + p) * s);
    const Jet R = radicand_w_n(c);
    out.radicand = R.value();
    c.put("M3^2", R);
    const Jet M = root(R, "M3");
    const Jet M2 = M * M;
    const Jet lead = (c.literal() ? 1.0 : -1.0) * d(M) / M;
    const Jet a1 = (lead * b1 + d(b1) + b2 * c.k1 + b3 * c.k2) / M2;
    const Jet a2 = (lead * b2 + b1 + d(b2) + b2 * c.h - b4 * c.k2) / M2;
    const Jet a3 = (lead * b3 + d(b3) - b3 * c.h - b4 * c.k1) / M2;
    const Jet a4 = (lead * b4 + d(b4) - b3) / M2;
    for (auto [n, v] : {std::pair{"b1", &b1}, {"b2", &b2}, {"b3", &b3}, {"b4", &b4}, {"a1", &a1}, {"a2", &a2},
                        {"a3", &a3}, {"a4", &a4}})
        c.put(n, *v);

    const double sv = s.value(), cv = co.value(), pv = p.value();
    nonzero(p, "psi3'");
    const double hs = 1 / (mm * pv);
    out.readout.h_weights = {hs * (cv - m * sv), -hs * (sv + m * cv), hs * (cv + m * sv), -hs * (sv - m * cv)};
    out.readout.k1_weights = {(sv + m * cv) / mm, -(-cv + m * sv) / mm, (sv - m * cv) / mm, (cv + m * sv) / mm};
    out.b = {a1.value(), a2.value(), a3.value(), a4.value()};
    std::tie(out.curvatures.h, out.curvatures.k1) = out.readout.apply(out.b);

    const double rv = over(q, p * p, "psi3'^2").value();
    const double n1 = (-rv * (cv - m * sv) + sv - m * cv) / mm;
    const double n2 = (rv * (sv + m * cv) + cv - m * sv) / mm;
    const double n3 = (rv * (cv + m * sv) - sv + m * cv) / mm;
    const double n4 = (-rv * (sv - m * cv) - cv - m * sv) / mm;
    out.curvatures.k2 = (n1 * (sv + m * cv) - n2 * (-cv + m * sv) + n3 * (sv - m * cv) + n4 * (cv + m * sv)) / mm;
    return out;
}

// ---- gamma-zeta-n ---------------------------------------------------------

struct GammaZetaNParts {
    Jet S, G1, G2, G3, e1, e2, e3;
};

inline GammaZetaNParts gamma_zeta_n_parts(const Context& c) {
    const Jet &phi1 = c.angle[0], &phi2 = c.angle[1];
    GammaZetaNParts g;
    g.S = sinh(phi2);
    if (!(std::abs(g.S.value()) > kDefaultSingularTol)) throw KindSingularity("sinh(Phi2)", c.t);
    g.G1 = sin(phi1) / g.S;
    g.G2 = cos(phi1) / g.S;
    g.G3 = cosh(phi2) / g.S;
    g.e1 = d(g.G1) + c.k1 * g.G2;
    g.e2 = g.G1 + d(g.G2) + c.h * g.G2 + c.k2 * g.G3;
    g.e3 = d(g.G3) - c.h * g.G3;
    return g;
}

inline Jet radicand_gamma_zeta_n(const Context& c) {
    const auto g = gamma_zeta_n_parts(c);
    return -(g.e1 * g.e1) - g.e2 * g.e2 + g.e3 * g.e3 + g.G3 * g.G3;
}

inline ClosedFormEvaluation eval_gamma_zeta_n(const Context& c) {
    ClosedFormEvaluation out;
    const auto P = gamma_zeta_n_parts(c);
    const double m = c.m, mm = c.mm(), K = 2 * mm;
    const Jet R = radicand_gamma_zeta_n(c);
    out.radicand = R.value();
    c.put("M4^2", R);
    const Jet M = root(R, "M4");
    const Jet g1 = P.e1 / M, g2 = P.e2 / M, g3 = P.e3 / M, g4 = -P.G3 / M;
    const Jet b1 = (d(g1) + g2 * c.k1 + c.k2 * g3) / M;
    const Jet b2 = (d(g2) + g1 + g2 * c.h - c.k2 * g4) / M;
    const Jet b3 = (d(g3) - g3 * c.h - c.k1 * g4) / M;
    const Jet b4 = (-g3 + d(g4)) / M;

    const Jet F = sin(c.angle[0]) + cosh(c.angle[1]), C = cos(c.angle[0]);
    const Jet twoS = 2.0 * P.S;
    const std::array<Jet, 4> hh = {(C - m * F) / twoS, -(F + m * C) / twoS, -(C + m * F) / twoS,
                                   (F - m * C) / twoS};
    const Jet f = F / twoS, g = C / twoS;
    const Jet Om = f * d(g) - d(f) * g;
    c.put("Omega4", Om);
    nonzero(Om, "Omega4");
    for (auto [n, v] : {std::pair{"g1", &g1}, {"g2", &g2}, {"g3", &g3}, {"g4", &g4}, {"b1", &b1}, {"b2", &b2},
                        {"b3", &b3}, {"b4", &b4}})
        c.put(n, *v);

    const std::array<Jet, 4> u = {d(hh[0]) + hh[1] * c.k1 + hh[2] * c.k2,
                                  d(hh[1]) + hh[0] + hh[1] * c.h - hh[3] * c.k2,
                                  d(hh[2]) - hh[2] * c.h - hh[3] * c.k1, d(hh[3]) - hh[2]};
    const double Fv = F.value(), Cv = C.value(), Sv = P.S.value(), Ov = Om.value();
    const double hs = 1 / (4 * mm * Ov * Sv);
    out.readout.h_weights = {-hs * (Cv - m * Fv), hs * (Fv + m * Cv), -hs * (Cv + m * Fv), hs * (Fv - m * Cv)};
    out.readout.k1_weights = {-u[0].value() / (K * Ov), -u[1].value() / (K * Ov), u[2].value() / (K * Ov),
                              u[3].value() / (K * Ov)};
    out.b = {b1.value(), b2.value(), b3.value(), b4.value()};
    std::tie(out.curvatures.h, out.curvatures.k1) = out.readout.apply(out.b);

    std::array<Jet, 4> n, dn;
    for (std::size_t i = 0; i < 4; ++i) {
        n[i] = hh[i] / (K * Om);
        dn[i] = c.literal() ? (-(hh[i] * d(Om)) / (Om * Om) + d(hh[i]) / Om) / (K * Om) : d(n[i]);
    }
    const double v1 = (dn[0] + n[1] * c.k1 + n[2] * c.k2).value();
    const double v2 = (dn[1] + n[0] + n[1] * c.h - n[3] * c.k2).value();
    const double v3 = (dn[2] - n[2] * c.h - n[3] * c.k1).value();
    const double v4 = (dn[3] - n[2]).value();
    out.curvatures.k2 =
        (-v1 * u[0].value() - v2 * u[1].value() + v3 * u[2].value() + v4 * u[3].value()) / (K * Ov);
    return out;
}

// ---- xi-n-w ---------------------------------------------------------------

inline Jet radicand_xi_n_w(const Context& c) {
    const Jet& phi = c.angle[0];
    const Jet p = d(phi), s = sinh(phi), ch = cosh(phi);
    const Jet x1 = c.k1 * s + c.k2, x2 = (p - c.k2) * ch + c.h * s, x3 = c.h + c.k1 * ch, x4 = p * s - 1.0;
    return 0.5 * (-(x1 * x1) - x2 * x2 + x3 * x3 + x4 * x4);
}

inline ClosedFormEvaluation eval_xi_n_w(const Context& c) {
    ClosedFormEvaluation out;
    const Jet& phi = c.angle[0];
    const Jet p = d(phi), s = sinh(phi), ch = cosh(phi), E = s + ch;
    const double m = c.m, mm = c.mm(), r2 = std::numbers::sqrt2;
    const Jet a1 = (c.k1 * s + c.k2) / r2, a2 = ((p - c.k2) * ch + c.h * s) / r2, a3 = -(c.h + c.k1 * ch) / r2,
              a4 = (p * s - 1.0) / r2;
    const Jet R = radicand_xi_n_w(c);
    out.radicand = R.value();
    c.put("M5^2", R);
    const Jet M = root(R, "M5");
    const Jet lead = d(M) / (M * M);
    const Jet c1 = -(lead * a1) + (d(a1) + a2 * c.k1 + a3 * c.k2) / M;
    const Jet c2 = -(lead * a2) + (a1 + d(a2) + c.h * a2 - c.k2 * a4) / M;
    const Jet c3 = -(lead * a3) + (d(a3) - c.h * a3 - c.k1 * a4) / M;
    const Jet c4 = -(lead * a4) + (d(a4) - a3) / M;
    for (auto [n, v] : {std::pair{"a1", &a1}, {"a2", &a2}, {"a3", &a3}, {"a4", &a4}, {"c1", &c1}, {"c2", &c2},
                        {"c3", &c3}, {"c4", &c4}})
        c.put(n, *v);

    const double Ev = E.value(), pv = p.value();
    nonzero(p, "Phi3'");
    nonzero(E, "sinh(Phi3)+cosh(Phi3)");
    const double hs = 4 / (mm * pv * Ev);
    out.readout.h_weights = {-hs * (Ev / (2 * r2) - m / r2), hs * (1 / r2 + m * Ev / (2 * r2)),
                             -hs * (Ev / (2 * r2) + m / r2), hs * (1 / r2 - m * Ev / (2 * r2))};
    const double ks = -r2 / (mm * Ev);
    out.readout.k1_weights = {-ks * Ev, ks * m * Ev, -ks * Ev, -ks * m * Ev};
    out.b = {c1.value(), c2.value(), c3.value(), c4.value()};
    std::tie(out.curvatures.h, out.curvatures.k1) = out.readout.apply(out.b);

    const Vec4Jet gp = Vec4Jet(E - 2.0 * m, -2.0 - m * E, -E - 2.0 * m, 2.0 - m * E) / (2 * r2);
    const Vec4Jet N = (4.0 / (mm * p * E)) * gp;
    out.curvatures.k2 = -4 / (mm * Ev * pv) * inner(values(differentiate(N)), values(differentiate(gp)));
    return out;
}

// ---- gamma-xi-w -----------------------------------------------------------

struct GammaXiWParts {
    Jet G1, G2, G3, e1, e2, e3, e4;
};

inline GammaXiWParts gamma_xi_w_parts(const Context& c) {
    const Jet &w1 = c.angle[0], &w2 = c.angle[1];
    GammaXiWParts g;
    g.G1 = sinh(w1) * sin(w2);
    g.G2 = sinh(w1) * cos(w2);
    g.G3 = cosh(w1);
    g.e1 = d(g.G1) + g.G2 * c.k1;
    g.e2 = g.G1 + d(g.G2) + c.h * g.G2 - c.k2 * g.G3;
    g.e3 = -(c.k1 * g.G3);
    g.e4 = d(g.G3);
    return g;
}

inline Jet radicand_gamma_xi_w(const Context& c) {
    const auto g = gamma_xi_w_parts(c);
    return -(g.e1 * g.e1) - g.e2 * g.e2 + g.e3 * g.e3 + (c.literal() ? g.e4 : g.e4 * g.e4);
}

inline Jet omega_gamma_xi_w_printed(const Context& c) {
    const Jet &w1 = c.angle[0], &w2 = c.angle[1];
    return 0.5 * (-(d(w1) * (sin(w2) + cos(w2))) - 0.5 * d(w2) * (cos(w2) - sin(w2)) * sinh(2.0 * w1));
}

inline std::pair<Jet, Jet> generators_gamma_xi_w(const Context& c) {
    const Jet &w1 = c.angle[0], &w2 = c.angle[1];
    return {0.5 * sinh(w1) * (sin(w2) + cos(w2)), 0.5 * cosh(w1)};
}

inline ClosedFormEvaluation eval_gamma_xi_w(const Context& c) {
    ClosedFormEvaluation out;
    const auto P = gamma_xi_w_parts(c);
    const double m = c.m, mm = c.mm(), K = 2 * mm;
    const Jet R = radicand_gamma_xi_w(c);
    out.radicand = R.value();
    c.put("M6^2", R);
    const Jet M = root(R, "M6");
    const Jet al1 = P.e1 / M, al2 = P.e2 / M, al3 = P.e3 / M, al4 = P.e4 / M;
    const Jet b1 = (d(al1) + al2 * c.k1 + al3 * c.k2) / M;
    const Jet b2 = (d(al2) + al1 + al2 * c.h - al4 * c.k2) / M;
    const Jet b3 = (d(al3) - al3 * c.h - al4 * c.k1) / M;
    const Jet b4 = (-al3 + d(al4)) / M;

    Jet Om;
    if (c.literal()) {
        Om = omega_gamma_xi_w_printed(c);
    } else {
        const auto [f, g] = generators_gamma_xi_w(c);
        Om = f * d(g) - d(f) * g;
    }
    c.put("Omega6", Om);
    nonzero(Om, "Omega6");
    for (auto [n, v] : {std::pair{"alpha1", &al1}, {"alpha2", &al2}, {"alpha3", &al3}, {"alpha4", &al4},
                        {"b1", &b1}, {"b2", &b2}, {"b3", &b3}, {"b4", &b4}})
        c.put(n, *v);

    const Jet sh1 = sinh(c.angle[0]), ch1 = cosh(c.angle[0]);
    const Jet Ps = sin(c.angle[1]) + cos(c.angle[1]);
    const std::array<Jet, 4> cc = {0.5 * (ch1 - m * sh1 * Ps), 0.5 * (-(sh1 * Ps) - m * ch1),
                                   0.5 * (-ch1 - m * sh1 * Ps), 0.5 * (sh1 * Ps - m * ch1)};
    const std::array<Jet, 4> dd = {d(cc[0]) + cc[1] * c.k1 + cc[2] * c.k2,
                                   d(cc[1]) + cc[0] + cc[1] * c.h - cc[3] * c.k2,
                                   d(cc[2]) - c.k1 * cc[3] - cc[2] * c.h, -cc[2] + d(cc[3])};
    const double Ov = Om.value(), den = K * Ov;
    out.readout.h_weights = {-cc[0].value() / den, -cc[1].value() / den, cc[2].value() / den,
                             cc[3].value() / den};
    out.readout.k1_weights = {dd[0].value() / den, dd[1].value() / den, -dd[2].value() / den,
                              -dd[3].value() / den};
    out.b = {b1.value(), b2.value(), b3.value(), b4.value()};
    std::tie(out.curvatures.h, out.curvatures.k1) = out.readout.apply(out.b);

    std::array<Jet, 4> n;
    for (std::size_t i = 0; i < 4; ++i) n[i] = cc[i] / (K * Om);
    const double v1 = (d(n[0]) + n[1] * c.k1 + n[2] * c.k2).value();
    const double v2 = (d(n[1]) + n[0] + n[1] * c.h - n[3] * c.k2).value();
    const double v3 = (d(n[2]) - n[2] * c.h - n[3] * c.k1).value();
    const double v4 = (-n[2] + d(n[3])).value();
    out.curvatures.k2 =
        -(-v1 * dd[0].value() - v2 * dd[1].value() + v3 * dd[2].value() + v4 * dd[3].value()) / den;
    return out;
}

// ---- gamma-xi-n-w ---------------------------------------------------------

inline std::array<Jet, 4> gamma_xi_n_w_alpha(const Context& c) {
    const Jet &w1 = c.angle[0], &w2 = c.angle[1];
    const Jet p1 = d(w1), p2 = d(w2), sh1 = sinh(w1), ch1 = cosh(w1), sh2 = sinh(w2), ch2 = cosh(w2);
    const double r2 = std::numbers::sqrt2;
    return {(p1 * ch1 + sh2 * c.k1 - c.k2 * ch2) / r2, (sh1 + p2 * ch2 + c.h * sh2 - c.k2 * ch1) / r2,
            (p2 * sh2 - c.h * ch2 - c.k1 * ch1) / r2, (-ch2 + p1 * sh1) / r2};
}

inline Jet radicand_gamma_xi_n_w(const Context& c) {
    const auto a = gamma_xi_n_w_alpha(c);
    return -(a[0] * a[0]) - a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
}

inline Jet omega_gamma_xi_n_w_printed(const Context& c) {
    const Jet &w1 = c.angle[0], &w2 = c.angle[1];
    const Jet p1 = d(w1), p2 = d(w2);
    return 0.125 * ((p1 + p2) * sinh(w1 - w2) - p1 + p2);
}

inline std::pair<Jet, Jet> generators_gamma_xi_n_w(const Context& c) {
    const Jet &w1 = c.angle[0], &w2 = c.angle[1];
    const double s = 2 * std::numbers::sqrt2;
    return {(sinh(w1) + cosh(w2)) / s, (sinh(w2) + cosh(w1)) / s};
}

inline ClosedFormEvaluation eval_gamma_xi_n_w(const Context& c) {
    ClosedFormEvaluation out;
    const double m = c.m, mm = c.mm(), K = 2 * mm;
    const Jet Om = omega_gamma_xi_n_w_printed(c);
    c.put("Omega7", Om);
    nonzero(Om, "Omega7");
    const auto al = gamma_xi_n_w_alpha(c);
    const Jet R = radicand_gamma_xi_n_w(c);
    out.radicand = R.value();
    c.put("M7^2", R);
    const Jet M = root(R, "M7");
    const Jet b1 = al[0] / M, b2 = al[1] / M, b3 = al[2] / M, b4 = al[3] / M;
    const Jet c1 = (d(b1) + b2 * c.k1 + (c.literal() ? al[2] : b3) * c.k2) / M;
    const Jet c2 = (d(b2) + b1 + b2 * c.h - b4 * c.k2) / M;
    const Jet c3 = (d(b3) - b3 * c.h - b4 * c.k1) / M;
    const Jet c4 = (-b3 + d(b4)) / M;
    for (auto [n, v] : {std::pair{"b1", &b1}, {"b2", &b2}, {"b3", &b3}, {"b4", &b4}, {"c1", &c1}, {"c2", &c2},
                        {"c3", &c3}, {"c4", &c4}})
        c.put(n, *v);

    const auto [f, g] = generators_gamma_xi_n_w(c);
    const Jet df = d(f), dg = d(g);
    const double fv = f.value(), gv = g.value(), dfv = df.value(), dgv = dg.value();
    const double Ov = Om.value(), den = K * Ov;
    out.readout.h_weights = {-(gv - m * fv) / den, (fv + m * gv) / den, -(gv + m * fv) / den, (fv - m * gv) / den};
    out.readout.k1_weights = {(dgv - m * dfv) / den, -(dfv + m * dgv) / den, (dgv + m * dfv) / den,
                              -(dfv - m * dgv) / den};
    out.b = {c1.value(), c2.value(), c3.value(), c4.value()};
    std::tie(out.curvatures.h, out.curvatures.k1) = out.readout.apply(out.b);

    const double r = -d(Om).value() / Ov;
    const double x1 = dgv - m * dfv, x2 = dfv + m * dgv, x3 = dgv + m * dfv, x4 = dfv - m * dgv;
    out.curvatures.k2 = (-(r * (gv - m * fv) + x1) * x1 - (r * (fv + m * gv) + x2) * x2 +
                         (r * (gv + m * fv) + x3) * x3 + (r * (fv - m * gv) + x4) * x4) /
                        sq(den);
    return out;
}

inline Jet radicand(SmarandacheKind k, const Context& c) {
    switch (k) {
    case SmarandacheKind::GammaW: return radicand_gamma_w(c);
    case SmarandacheKind::XiN: return radicand_xi_n(c);
    case SmarandacheKind::WN: return radicand_w_n(c);
    case SmarandacheKind::GammaZetaN: return radicand_gamma_zeta_n(c);
    case SmarandacheKind::XiNW: return radicand_xi_n_w(c);
    case SmarandacheKind::GammaXiW: return radicand_gamma_xi_w(c);
    case SmarandacheKind::GammaXiNW: return radicand_gamma_xi_n_w(c);
    }
    throw InvalidConfig("unknown kind");
}

inline ClosedFormEvaluation evaluate(SmarandacheKind k, const Context& c) {
    switch (k) {
    case SmarandacheKind::GammaW: return eval_gamma_w(c);
    case SmarandacheKind::XiN: return eval_xi_n(c);
    case SmarandacheKind::WN: return eval_w_n(c);
    case SmarandacheKind::GammaZetaN: return eval_gamma_zeta_n(c);
    case SmarandacheKind::XiNW: return eval_xi_n_w(c);
    case SmarandacheKind::GammaXiW: return eval_gamma_xi_w(c);
    case SmarandacheKind::GammaXiNW: return eval_gamma_xi_n_w(c);
    }
    throw InvalidConfig("unknown kind");
}

} // namespace closed_form

/// Signed value of the published normalizer radicand. A negative value means
/// the printed normalizer is not real at t.
inline double paper_normalizer(const SmarandacheSpec& spec, double t, FormulaMode mode) {
    return closed_form::radicand(spec.kind(), closed_form::make_context(spec, t, mode)).value();
}

inline ClosedFormEvaluation paper_curvatures(const SmarandacheSpec& spec, double t, FormulaMode mode) {
    ClosedFormEvaluation out;
    std::vector<std::pair<std::string, double>> log;
    closed_form::Context ctx = closed_form::make_context(spec, t, mode);
    ctx.log = &log;
    out = closed_form::evaluate(spec.kind(), ctx);
    out.coefficients = std::move(log);
    return out;
}

/// Printed Omega_k of the family against f g' - f' g of the generator pair
/// its normal vector is expressed with.
inline OmegaRecord omega_record(const SmarandacheSpec& spec, double t) {
    using closed_form::d;
    const auto ctx = closed_form::make_context(spec, t, FormulaMode::Literal);
    const Jet& a = ctx.angle[0];
    auto wronskian = [](const Jet& f, const Jet& g) { return (f * d(g) - d(f) * g).value(); };
    switch (spec.kind()) {
    case SmarandacheKind::GammaW:
        return {-d(a).value() / 4, wronskian(0.5 * sinh(a), 0.5 * cosh(a))};
    case SmarandacheKind::XiN:
        return {d(a).value() / 4, wronskian(0.5 * cosh(a), 0.5 * sinh(a))};
    case SmarandacheKind::WN:
        return {-d(a).value() / 4, wronskian(0.5 * sin(a), 0.5 * cos(a))};
    case SmarandacheKind::GammaZetaN: {
        const Jet S = 2.0 * sinh(ctx.angle[1]);
        if (!(std::abs(S.value()) > kDefaultSingularTol)) throw KindSingularity("sinh(Phi2)", t);
        return {std::nullopt, wronskian((sin(a) + cosh(ctx.angle[1])) / S, cos(a) / S)};
    }
    case SmarandacheKind::XiNW: {
        const double s = 2 * std::numbers::sqrt2;
        const Jet E = sinh(a) + cosh(a);
        return {(d(a) * E).value() / 8, wronskian(Jet::constant(1 / s, a.order()), E / s)};
    }
    case SmarandacheKind::GammaXiW: {
        const auto [f, g] = closed_form::generators_gamma_xi_w(ctx);
        return {closed_form::omega_gamma_xi_w_printed(ctx).value(), wronskian(f, g)};
    }
    case SmarandacheKind::GammaXiNW: {
        const auto [f, g] = closed_form::generators_gamma_xi_n_w(ctx);
        return {closed_form::omega_gamma_xi_n_w_printed(ctx).value(), wronskian(f, g)};
    }
    }
    throw InvalidConfig("unknown kind");
}

} // namespace nullcone
