// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nullcone/cli.hpp"

using namespace nullcone;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

std::vector<FixtureSpec> fixtures() {
    std::vector<FixtureSpec> v;
    for (double a : {0.5, 1.0, 2.0})
        for (double m : {0.0, 1.0, 2.0}) v.push_back({FixtureKind::Hyperbolic, a, m});
    for (double m : {0.0, 2.0}) v.push_back({FixtureKind::Trigonometric, 1, m});
    return v;
}

const std::vector<double>& grid201() {
    static const std::vector<double> g = make_grid(-2, 2, 201);
    return g;
}

std::string at(const FixtureSpec& fx, double t) { return fx.label() + " t=" + format_double(t); }

Outcome canonical_nullity() {
    Outcome o;
    for (const auto& fx : fixtures()) {
        const NullValidation v = validate_null(canonical_curve(fx.pair()), grid201(), 1e-12);
        o.require(v.passed, fx.label() + " residual " + format_double(v.max_residual));
    }
    return o;
}

Outcome perp_identities() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-2, 2);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const Vec4 a{u(rng), u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng), u(rng)};
        for (auto pv : {PerpVariant::P13, PerpVariant::P14}) {
            worst = std::max(worst, std::abs(inner(a, b) - inner(perp(a, pv), perp(b, pv))));
            worst = std::max(worst, std::abs(inner(a, perp(b, pv)) + inner(perp(a, pv), b)));
        }
    }
    o.require(worst <= 1e-12, "worst residual " + format_double(worst));
    return o;
}

Outcome frame_axioms() {
    Outcome o;
    for (const auto& fx : fixtures()) {
        const ConeCurve c = canonical_curve(fx.pair());
        for (double t : grid201()) {
            const NaturalFrame f = build_frame(c, t);
            o.require(max_gram_residual(f) <= 1e-9, at(fx, t) + " gram " + format_double(max_gram_residual(f)));
            o.require(std::abs(inner(f.xi, f.N) - 1) <= 1e-9, at(fx, t) + " <xi,N>");
            o.require(std::abs(inner(f.gamma, f.W) - 1) <= 1e-9, at(fx, t) + " <gamma,W>");
        }
    }
    return o;
}

Outcome pairing_identity() {
    Outcome o;
    for (const auto& fx : fixtures()) {
        const GeneratorPair gp = fx.pair();
        const ConeCurve c = canonical_curve(gp);
        for (double t : grid201()) {
            const Vec4Jet g = c.jet(t, 1);
            const double d = inner(perp(values(g), PerpVariant::P14), values(differentiate(g)));
            const double want = 2 * (1 + fx.m * fx.m) * omega(gp, t);
            o.require(std::abs(d - want) <= 1e-10 * std::max(1.0, std::abs(want)), at(fx, t));
        }
    }
    return o;
}

Outcome frenet_residuals_and_fixture_curvatures() {
    Outcome o;
    for (const auto& fx : fixtures()) {
        const ConeCurve c = canonical_curve(fx.pair());
        const CurvatureTriple want = fx.expected_curvatures();
        for (double t : grid201()) {
            const double r = frenet_residuals(c, t).max();
            o.require(r <= 1e-8, at(fx, t) + " residual " + format_double(r));
            const CurvatureTriple k = curvatures(c, t);
            o.require(std::abs(k.h - want.h) <= 1e-9 && std::abs(k.k1 - want.k1) <= 1e-9 &&
                          std::abs(k.k2 - want.k2) <= 1e-9,
                      at(fx, t) + " curvatures");
        }
    }
    return o;
}

double rel_vec(const Vec4& a, const Vec4& b) {
    double m = 0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
    return m;
}

Outcome differentiation_cross_oracle() {
    Outcome o;
    const std::array<double, 4> steps = VerifyConfig::defaults().fd_steps;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> tpick(-1, 1);
    int drawn = 0;
    double worst = 0;
    while (drawn < 1000) {
        const Expr e = random_expression(rng, 3);
        const double t = tpick(rng);
        Jet j;
        try {
            j = jet_eval(e, t, 4);
        } catch (const DomainError&) {
            continue;
        }
        if (std::abs(j.value()) > 1e8) continue;
        ++drawn;
        for (int k = 1; k <= 4; ++k) {
            const double h = steps[k - 1] * std::max(1.0, std::abs(t));
            const double scale = std::max({1.0, std::abs(j.value()), std::abs(j.derivative(k))});
            worst = std::max(worst, std::abs(fd_derivative(e, t, k, h) - j.derivative(k)) / scale);
        }
    }
    o.require(worst <= 1e-5, "random expressions worst " + format_double(worst));

    for (const auto& fx : fixtures()) {
        const ConeCurve c = canonical_curve(fx.pair());
        for (double t : grid201()) {
            const FrameJets fj = frame_jets(c, t, 2);
            const std::array<Vec4, 4> jet = {values(differentiate(fj.gamma)), values(differentiate(fj.xi)),
                                             values(differentiate(fj.N)), values(differentiate(fj.W))};
            for (int i = 0; i < 4; ++i) {
                auto field = [&](double y) {
                    const NaturalFrame f = build_frame(c, y);
                    return i == 0 ? f.gamma : i == 1 ? f.xi : i == 2 ? f.N : f.W;
                };
                const Vec4 fd = central_derivative(field, t, 1, 1e-4 * std::max(1.0, std::abs(t)));
                o.require(rel_vec(fd, jet[i]) <= 1e-5, at(fx, t) + " frame field " + std::to_string(i));
            }
        }
    }
    return o;
}

Outcome collapse_identities() {
    Outcome o;
    struct Case {
        SmarandacheKind kind;
        std::vector<std::string> angles;
        int target; // 0: W, 1: N, 2: (N + W)/sqrt2
    };
    const std::vector<Case> cases = {{SmarandacheKind::GammaW, {"0"}, 0},
                                     {SmarandacheKind::XiN, {"0"}, 1},
                                     {SmarandacheKind::WN, {"0"}, 0},
                                     {SmarandacheKind::XiNW, {"0"}, 2},
                                     {SmarandacheKind::GammaXiNW, {"0", "0"}, 2}};
    for (const auto& fx : fixtures()) {
        const ConeCurve base = canonical_curve(fx.pair());
        for (const auto& cs : cases) {
            const SmarandacheSpec spec(base, cs.kind, AngleSet::from_text(cs.angles));
            for (double t : grid201()) {
                const NaturalFrame f = build_frame(base, t);
                const Vec4 want = cs.target == 0 ? f.W : cs.target == 1 ? f.N : (f.N + f.W) / std::numbers::sqrt2;
                o.require(max_abs_diff(smarandache_curve(spec, t), want) <= 1e-12,
                          std::string(to_string(cs.kind)) + " " + at(fx, t));
            }
        }
    }
    return o;
}

Outcome gamma_w_tangent_norm() {
    Outcome o;
    const ConeCurve base = canonical_curve(fixture(FixtureKind::Hyperbolic, 1, 2));
    const SmarandacheSpec null_spec(base, SmarandacheKind::GammaW, AngleSet::from_text({"t"}));
    const SmarandacheSpec spec(base, SmarandacheKind::GammaW, AngleSet::from_text({"2*t"}));
    for (double t : grid201()) {
        const double n0 = derived_tangent(null_spec, t).norm2;
        o.require(std::abs(n0) <= 1e-9, "psi1 = t, t=" + format_double(t) + " norm2 " + format_double(n0));
        const double want = 3 * std::sinh(4 * t);
        const double got = fd_tangent(spec, t, 1e-4 * std::max(1.0, std::abs(t))).norm2;
        o.require(std::abs(got - want) <= 1e-6 * std::max(1.0, std::abs(want)),
                  "psi1 = 2t, t=" + format_double(t) + " norm2 " + format_double(got));
    }
    return o;
}

Outcome curvature_audit_report() {
    Outcome o;
    const std::vector<std::string> args = {"verify", "--suite", "smarandache-curvature-audit"};
    std::ostringstream out1, out2, err;
    const int code1 = cli::run(args, out1, err);
    const int code2 = cli::run(args, out2, err);
    o.require(code1 == 0 && code2 == 0, "exit codes " + std::to_string(code1) + ", " + std::to_string(code2));
    o.require(out1.str() == out2.str(), "reports differ between runs");
    if (!o.pass) return o;

    const auto doc = nlohmann::json::parse(out1.str());
    const auto& suite = doc.at("suites").at(0);
    for (const auto& c : suite.at("checks"))
        if (c.at("name") == "harness errors") o.require(c.at("passed").get<bool>(), "harness errors");

    std::set<std::string> kinds, modes;
    int matches = 0;
    for (const auto& rep : suite.at("comparisons")) {
        const std::string subject = rep.at("subject");
        if (subject == "self-test") {
            for (const auto& r : rep.at("records")) matches += r.at("verdict") == "match";
            continue;
        }
        o.require(rep.at("records").size() == 11, subject + " record count");
        kinds.insert(subject);
        modes.insert(rep.at("mode").get<std::string>());
    }
    for (auto k : kAllKinds) o.require(kinds.count(std::string(to_string(k))) == 1, "no records for " + std::string(to_string(k)));
    o.require(modes == std::set<std::string>{"literal", "corrected"}, "formula modes");
    o.require(matches > 0, "no match verdict");
    return o;
}

Outcome negative_controls() {
    Outcome o;
    const AuditReport r = run_suite(SuiteId::All, VerifyConfig::defaults());
    for (const auto& s : r.suites) {
        int controls = 0;
        for (const auto& c : s.checks) {
            if (!c.expected_fail) continue;
            ++controls;
            o.require(!c.passed, std::string(to_string(s.id)) + ": " + c.name + " passed");
        }
        o.require(controls > 0, std::string(to_string(s.id)) + " has no negative control");
    }
    FrameOptions tampered;
    tampered.perp = PerpVariant::P13;
    const auto rep = self_test_report(canonical_curve(fixture(FixtureKind::Hyperbolic, 1, 2)), make_grid(-1, 1, 11),
                                      tampered);
    o.require(rep.counts().at("match") == 0, "tampered self-test matched");
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"canonical nullity", canonical_nullity},
        {"perp identities", perp_identities},
        {"frame axioms", frame_axioms},
        {"pairing identity", pairing_identity},
        {"Frenet residuals and fixture curvatures", frenet_residuals_and_fixture_curvatures},
        {"differentiation cross-oracle", differentiation_cross_oracle},
        {"Smarandache collapse identities", collapse_identities},
        {"gamma-w tangent norm", gamma_w_tangent_norm},
        {"curvature audit report", curvature_audit_report},
        {"negative controls", negative_controls},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s %zu %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.pass ? "" : ": ",
                    o.detail.c_str());
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
