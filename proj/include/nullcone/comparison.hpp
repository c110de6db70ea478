#pragma once

// Point-by-point comparison of the closed-form curvature tables against the
// definitional oracle. Failures never escape as exceptions: every grid point
// yields a record whose verdict says what happened there.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nullcone/closed_form.hpp"
#include "nullcone/grid.hpp"
#include "nullcone/smarandache.hpp"

namespace nullcone {

enum class Verdict { Match, Mismatch, Singular, DomainError };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Singular: return "singular";
    case Verdict::DomainError: return "domain-error";
    }
    return "?";
}

inline constexpr double kDefaultAuditTol = 1e-6;

struct ComparisonRecord {
    double t = 0;
    Verdict verdict = Verdict::Match;
    std::string detail;
    std::optional<CurvatureTriple> closed_form;
    std::optional<CurvatureTriple> oracle;
    std::optional<double> max_delta;
    std::optional<double> closed_form_radicand;
    std::optional<double> tangent_norm2;
    std::optional<double> position_norm2;
    std::vector<GramCondition> axioms;
    std::optional<OmegaRecord> omega;
    std::vector<std::pair<std::string, double>> coefficients;
};

struct ComparisonReport {
    std::string subject; // kind name, or "self-test"
    std::string base;
    std::vector<std::string> angles;
    std::string mode;
    double tolerance = kDefaultAuditTol;
    std::vector<ComparisonRecord> records;

    std::map<std::string, int> counts() const {
        std::map<std::string, int> c;
        for (auto v : {Verdict::Match, Verdict::Mismatch, Verdict::Singular, Verdict::DomainError})
            c[std::string(to_string(v))] = 0;
        for (const auto& r : records) ++c[std::string(to_string(r.verdict))];
        return c;
    }
};

namespace detail {

inline bool finite(const CurvatureTriple& c) {
    return std::isfinite(c.h) && std::isfinite(c.k1) && std::isfinite(c.k2);
}

/// Largest |a - b| / max(1, |b|) over the three curvatures.
inline double triple_delta(const CurvatureTriple& a, const CurvatureTriple& b) {
    auto one = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
    return std::max({one(a.h, b.h), one(a.k1, b.k1), one(a.k2, b.k2)});
}

inline void judge(ComparisonRecord& r, double tol) {
    if (!r.closed_form || !r.oracle) return;
    if (!finite(*r.closed_form) || !finite(*r.oracle)) {
        r.verdict = Verdict::DomainError;
        r.detail = "non-finite curvature";
        return;
    }
    r.max_delta = triple_delta(*r.closed_form, *r.oracle);
    r.verdict = *r.max_delta <= tol ? Verdict::Match : Verdict::Mismatch;
}

} // namespace detail

inline ComparisonRecord compare_point(const SmarandacheSpec& spec, double t, FormulaMode mode,
                                      double tol = kDefaultAuditTol) {
    ComparisonRecord r;
    r.t = t;
    std::optional<Verdict> failure;
    auto note = [&](Verdict v, const std::string& what) {
        if (!failure) failure = v;
        r.detail += (r.detail.empty() ? "" : "; ") + what;
    };

    try {
        const Vec4 p = smarandache_curve(spec, t);
        r.position_norm2 = inner(p, p);
        r.tangent_norm2 = derived_tangent(spec, t).norm2;
    } catch (const KindSingularity& e) {
        note(Verdict::Singular, e.what());
    } catch (const SingularFrame& e) {
        note(Verdict::Singular, std::string("base ") + e.what());
    } catch (const Error& e) {
        note(Verdict::DomainError, e.what());
    }

    if (!failure) {
        try {
            const OracleResult o = oracle_curvatures(spec, t);
            r.oracle = o.curvatures;
            r.axioms.assign(o.gram.begin(), o.gram.end());
        } catch (const SingularFrame& e) {
            note(Verdict::Singular, std::string("derived ") + e.what());
        } catch (const Error& e) {
            note(Verdict::DomainError, std::string("oracle: ") + e.what());
        }
        try {
            r.omega = omega_record(spec, t);
        } catch (const Error& e) {
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("omega: ") + e.what();
        }
        try {
            r.closed_form_radicand = paper_normalizer(spec, t, mode);
        } catch (const Error& e) {
            note(Verdict::DomainError, std::string("radicand: ") + e.what());
        }
        try {
            ClosedFormEvaluation ev = paper_curvatures(spec, t, mode);
            r.closed_form = ev.curvatures;
            r.coefficients = std::move(ev.coefficients);
        } catch (const KindSingularity& e) {
            note(Verdict::Singular, e.what());
        } catch (const Error& e) {
            note(Verdict::DomainError, e.what());
        }
    }

    if (failure) {
        // The oracle runs before the closed form, so a singular derived frame
        // is the verdict even when the closed form also fails.
        r.verdict = *failure;
        return r;
    }
    detail::judge(r, tol);
    return r;
}

inline ComparisonReport comparison_report(const SmarandacheSpec& spec, const std::vector<double>& grid,
                                          FormulaMode mode, double tol = kDefaultAuditTol) {
    if (grid.empty()) throw InvalidConfig("comparison grid must be nonempty");
    ComparisonReport rep;
    rep.subject = std::string(to_string(spec.kind()));
    rep.base = spec.base().label();
    for (const auto& a : spec.angles().angles) rep.angles.push_back(to_string(a));
    rep.mode = std::string(to_string(mode));
    rep.tolerance = tol;
    for (double t : grid) rep.records.push_back(compare_point(spec, t, mode, tol));
    return rep;
}

/// Pass-through self-test: the oracle applied to the base curve itself must
/// reproduce the frame module's curvatures. `opt` lets callers tamper with the
/// oracle's construction.
inline ComparisonReport self_test_report(const ConeCurve& base, const std::vector<double>& grid,
                                         const FrameOptions& opt = {}, double tol = 1e-9) {
    ComparisonReport rep;
    rep.subject = "self-test";
    rep.base = base.label();
    rep.mode = std::string(to_string(opt.perp));
    rep.tolerance = tol;
    for (double t : grid) {
        ComparisonRecord r;
        r.t = t;
        try {
            r.closed_form = curvatures(base, t);
        } catch (const SingularFrame& e) {
            r.verdict = Verdict::Singular;
            r.detail = std::string("reference ") + e.what();
        }
        try {
            const OracleResult o = oracle_curvatures_of(base, t, opt);
            r.oracle = o.curvatures;
            r.axioms.assign(o.gram.begin(), o.gram.end());
        } catch (const SingularFrame& e) {
            r.verdict = Verdict::Singular;
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("oracle ") + e.what();
        }
        detail::judge(r, tol);
        rep.records.push_back(std::move(r));
    }
    return rep;
}

// ---- serialization --------------------------------------------------------

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const CurvatureTriple& c) { return {{"h", c.h}, {"k1", c.k1}, {"k2", c.k2}}; }

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, CurvatureTriple>)
        return to_json(*v);
    else
        return *v;
}

inline ordered_json to_json(const ComparisonRecord& r) {
    ordered_json j;
    j["t"] = r.t;
    j["verdict"] = to_string(r.verdict);
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["closed_form"] = optional_json(r.closed_form);
    j["oracle"] = optional_json(r.oracle);
    j["max_delta"] = optional_json(r.max_delta);
    j["radicand"] = {{"closed_form", optional_json(r.closed_form_radicand)}, {"tangent_norm2", optional_json(r.tangent_norm2)}};
    j["position_norm2"] = optional_json(r.position_norm2);
    ordered_json ax = ordered_json::object();
    for (const auto& g : r.axioms) ax[std::string(g.name)] = g.residual();
    j["axiom_residuals"] = ax;
    if (r.omega) j["omega"] = {{"printed", optional_json(r.omega->printed)}, {"generators", r.omega->generators}};
    if (!r.coefficients.empty()) {
        ordered_json co = ordered_json::object();
        for (const auto& [k, v] : r.coefficients) co[k] = v;
        j["coefficients"] = co;
    }
    return j;
}

inline ordered_json to_json(const ComparisonReport& rep) {
    ordered_json j;
    j["subject"] = rep.subject;
    j["base"] = rep.base;
    j["angles"] = rep.angles;
    j["mode"] = rep.mode;
    j["tolerance"] = rep.tolerance;
    ordered_json counts = ordered_json::object();
    for (const auto& [k, v] : rep.counts()) counts[k] = v;
    j["summary"] = counts;
    ordered_json recs = ordered_json::array();
    for (const auto& r : rep.records) recs.push_back(to_json(r));
    j["records"] = recs;
    return j;
}

} // namespace nullcone
