#pragma once

// Command-line frontend. Verbs: eval, frame, smarandache (eval with a
// required --kind) and verify. Settings come from an optional JSON config
// file; flags override it key by key, and the merged config is echoed into
// every JSON document the tool writes.
//
// Exit codes: 0 ok, 1 verify found failing checks, 2 configuration error,
// 3 some sample row was flagged (singular frame or domain error; rows are
// still written), 4 the output could not be written.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullcone/comparison.hpp"
#include "nullcone/cone_frame.hpp"
#include "nullcone/grid.hpp"
#include "nullcone/null_curve.hpp"
#include "nullcone/smarandache.hpp"
#include "nullcone/verify.hpp"

namespace nullcone::cli {

enum ExitCode { kOk = 0, kChecksFailed = 1, kConfigError = 2, kFlaggedRows = 3, kWriteError = 4 };

using json = nlohmann::ordered_json;

/// Effective settings: the config file with flags laid over it.
struct Settings {
    json values = json::object();

    template <class T>
    T get(const char* key, T fallback) const {
        if (!values.contains(key)) return fallback;
        try {
            return values.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw InvalidConfig(std::string("config key '") + key + "' has the wrong type");
        }
    }
    bool has(const char* key) const { return values.contains(key); }
};

inline json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("cannot read config file '" + path + "'");
    try {
        json j = json::parse(in);
        if (!j.is_object()) throw InvalidConfig("config file must hold a JSON object");
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidConfig("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

inline void check_metric(const Settings& s) {
    if (s.has("metric") && s.get<std::string>("metric", "") != kMetricSignature)
        throw InvalidConfig("only the metric convention " + std::string(kMetricSignature) + " is supported");
}

struct Selection {
    GeneratorPair generators;
    std::optional<SmarandacheSpec> spec;
    ConeCurve curve;
};

inline Selection select_curve(const Settings& s) {
    const double m = s.get<double>("m", 0.0);
    GeneratorPair gp = [&] {
        if (s.has("f") || s.has("g")) {
            if (!s.has("f") || !s.has("g")) throw InvalidConfig("explicit generators need both f and g");
            return GeneratorPair::from_text(s.get<std::string>("f", ""), s.get<std::string>("g", ""), m);
        }
        return fixture(parse_fixture_kind(s.get<std::string>("fixture", "hyperbolic")), s.get<double>("a", 1.0), m);
    }();
    ConeCurve base = canonical_curve(gp);
    if (!s.has("kind")) return {gp, std::nullopt, base};
    const SmarandacheKind kind = parse_kind(s.get<std::string>("kind", ""));
    const auto angles = s.get<std::vector<std::string>>("angles", {});
    if (static_cast<int>(angles.size()) != angle_arity(kind))
        throw InvalidConfig("kind " + std::string(to_string(kind)) + " needs " + std::to_string(angle_arity(kind)) +
                            " angle function(s)");
    SmarandacheSpec spec(base, kind, AngleSet::from_text(angles));
    ConeCurve derived = derived_curve(spec);
    return {gp, spec, derived};
}

inline std::vector<double> select_grid(const Settings& s) {
    if (s.has("t")) {
        const double t = s.get<double>("t", 0.0);
        if (!std::isfinite(t)) throw InvalidConfig("t must be finite");
        return {t};
    }
    return make_grid(s.get<double>("t0", -1.0), s.get<double>("t1", 1.0), s.get<int>("samples", 11));
}

inline std::string select_format(const Settings& s, const char* fallback, std::initializer_list<const char*> allowed) {
    const std::string f = s.get<std::string>("format", fallback);
    for (const char* a : allowed)
        if (f == a) return f;
    throw InvalidConfig("unsupported format '" + f + "'");
}

inline json vec_json(const Vec4& v) { return json::array({v[0], v[1], v[2], v[3]}); }

inline void csv_vec(std::ostream& os, const std::optional<Vec4>& v) {
    for (std::size_t i = 0; i < 4; ++i) os << ',' << (v ? format_double((*v)[i]) : "");
}

inline void csv_num(std::ostream& os, const std::optional<double>& v) { os << ',' << (v ? format_double(*v) : ""); }

struct Outcome {
    std::string body;
    int code = kOk;
};

inline Outcome cmd_eval(const Settings& s) {
    const Selection sel = select_curve(s);
    const auto grid = select_grid(s);
    const std::string format = select_format(s, "csv", {"csv", "json"});
    Outcome out;
    std::ostringstream csv;
    json rows = json::array();
    csv << "t,x1,x2,x3,x4,status\n";
    for (double t : grid) {
        std::optional<Vec4> p;
        std::string status = "ok", detail;
        try {
            p = sel.spec ? smarandache_curve(*sel.spec, t) : sel.curve.position(t);
        } catch (const SingularFrame& e) {
            status = "singular";
            detail = e.what();
        } catch (const KindSingularity& e) {
            status = "singular";
            detail = e.what();
        } catch (const DomainError& e) {
            status = "domain-error";
            detail = e.what();
        }
        if (status != "ok") out.code = kFlaggedRows;
        csv << format_double(t);
        csv_vec(csv, p);
        csv << ',' << status << '\n';
        json r = {{"t", t}, {"position", p ? vec_json(*p) : json(nullptr)}, {"status", status}};
        if (!detail.empty()) r["detail"] = detail;
        rows.push_back(r);
    }
    if (format == "csv") {
        out.body = csv.str();
    } else {
        json doc = {{"config", s.values}, {"curve", sel.curve.label()}, {"rows", rows}};
        out.body = doc.dump(2) + "\n";
    }
    return out;
}

inline Outcome cmd_frame(const Settings& s) {
    const Selection sel = select_curve(s);
    const auto grid = select_grid(s);
    const std::string format = select_format(s, "json", {"csv", "json"});
    Outcome out;
    std::ostringstream csv;
    csv << "t,gamma1,gamma2,gamma3,gamma4,xi1,xi2,xi3,xi4,N1,N2,N3,N4,W1,W2,W3,W4,h,k1,k2,pairing,gram_max,"
           "frenet_max,status\n";
    json points = json::array();
    for (double t : grid) {
        std::optional<NaturalFrame> f;
        std::optional<CurvatureTriple> k;
        std::optional<FrenetResiduals> fr;
        std::string status = "ok", detail;
        try {
            f = build_frame(sel.curve, t);
            k = curvatures(sel.curve, t);
            fr = frenet_residuals(sel.curve, t);
        } catch (const SingularFrame& e) {
            status = "singular";
            detail = e.what();
        } catch (const KindSingularity& e) {
            status = "singular";
            detail = e.what();
        } catch (const DomainError& e) {
            status = "domain-error";
            detail = e.what();
        }
        if (status != "ok") out.code = kFlaggedRows;
        const bool full = f && k && fr;
        csv << format_double(t);
        csv_vec(csv, full ? std::optional<Vec4>(f->gamma) : std::nullopt);
        csv_vec(csv, full ? std::optional<Vec4>(f->xi) : std::nullopt);
        csv_vec(csv, full ? std::optional<Vec4>(f->N) : std::nullopt);
        csv_vec(csv, full ? std::optional<Vec4>(f->W) : std::nullopt);
        csv_num(csv, full ? std::optional<double>(k->h) : std::nullopt);
        csv_num(csv, full ? std::optional<double>(k->k1) : std::nullopt);
        csv_num(csv, full ? std::optional<double>(k->k2) : std::nullopt);
        csv_num(csv, full ? std::optional<double>(f->pairing) : std::nullopt);
        csv_num(csv, full ? std::optional<double>(max_gram_residual(*f)) : std::nullopt);
        csv_num(csv, full ? std::optional<double>(fr->max()) : std::nullopt);
        csv << ',' << status << '\n';

        json p = {{"t", t}, {"status", status}};
        if (!detail.empty()) p["detail"] = detail;
        if (full) {
            p["gamma"] = vec_json(f->gamma);
            p["xi"] = vec_json(f->xi);
            p["N"] = vec_json(f->N);
            p["W"] = vec_json(f->W);
            p["pairing"] = f->pairing;
            p["curvatures"] = to_json(*k);
            json gram = json::object();
            for (const auto& g : gram_conditions(*f))
                gram[std::string(g.name)] = {{"value", g.value}, {"expected", g.expected}, {"residual", g.residual()}};
            p["gram"] = gram;
            p["frenet"] = {{"tangent", fr->tangent},
                           {"acceleration", fr->acceleration},
                           {"normal", fr->normal},
                           {"binormal", fr->binormal}};
        }
        points.push_back(p);
    }
    if (format == "csv") {
        out.body = csv.str();
    } else {
        json doc = {{"config", s.values}, {"curve", sel.curve.label()}, {"points", points}};
        out.body = doc.dump(2) + "\n";
    }
    return out;
}

inline Outcome cmd_verify(const Settings& s) {
    const SuiteId id = parse_suite(s.get<std::string>("suite", "all"));
    const std::string format = select_format(s, "json", {"json", "text"});
    VerifyConfig cfg = VerifyConfig::defaults();
    if (s.has("seed")) cfg.seed = s.get<std::uint64_t>("seed", cfg.seed);
    if (s.has("tol")) cfg.tol.audit = s.get<double>("tol", cfg.tol.audit);
    if (s.has("t0")) cfg.t0 = s.get<double>("t0", cfg.t0);
    if (s.has("t1")) cfg.t1 = s.get<double>("t1", cfg.t1);
    if (s.has("samples")) cfg.samples = s.get<int>("samples", cfg.samples);
    if (s.has("formula_mode")) {
        const std::string m = s.get<std::string>("formula_mode", "both");
        if (m != "both") cfg.modes = {parse_formula_mode(m)};
    }
    const bool strict = s.get<bool>("strict", false);
    const AuditReport report = run_suite(id, cfg);
    Outcome out;
    out.code = report.ok(strict) ? kOk : kChecksFailed;
    if (format == "json") {
        json doc = to_json(report);
        doc["header"]["invocation"] = s.values;
        out.body = doc.dump(2) + "\n";
    } else {
        out.body = to_text(report);
    }
    return out;
}

inline int write_output(const Settings& s, const std::string& body, std::ostream& out, std::ostream& err) {
    if (!s.has("output")) {
        out << body;
        return kOk;
    }
    const std::string path = s.get<std::string>("output", "");
    std::ofstream f(path, std::ios::binary);
    if (f) f << body;
    if (!f) {
        err << "error: cannot write output '" << path << "'\n";
        return kWriteError;
    }
    return kOk;
}

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Null curves on the lightlike cone: frames, curvatures, Smarandache curves and audits", "nullcone"};
    app.require_subcommand(1);

    struct Flags {
        std::string config, fixture, f, g, kind, format, output, formula_mode, suite;
        std::string psi, phi1, phi2, phi3, omega1, omega2;
        double a = 1, m = 0, t0 = -1, t1 = 1, t = 0, tol = 0;
        int samples = 11;
        std::uint64_t seed = 0;
        bool strict = false;
    } fl;

    std::vector<std::pair<CLI::Option*, std::string>> keyed;
    std::vector<std::pair<CLI::Option*, int>> angle_slots;
    std::vector<std::pair<CLI::Option*, std::string*>> angle_values;
    CLI::Option* strict_opt = nullptr;
    CLI::Option* config_opt = nullptr;

    auto add_common = [&](CLI::App* sub, bool curve, bool verify) {
        auto opt = [&](const char* flag, auto& target, const char* key, const char* help) {
            keyed.emplace_back(sub->add_option(flag, target, help), key);
        };
        config_opt = sub->add_option("--config", fl.config, "JSON config file; flags override its keys");
        if (curve) {
            opt("--fixture", fl.fixture, "fixture", "hyperbolic or trigonometric");
            opt("--a", fl.a, "a", "fixture parameter a");
            opt("--m", fl.m, "m", "generator constant m");
            opt("--f", fl.f, "f", "generator f(t) (overrides the fixture)");
            opt("--g", fl.g, "g", "generator g(t)");
            opt("--t", fl.t, "t", "single parameter value instead of a grid");
            opt("--kind", fl.kind, "kind", "Smarandache kind");
            const std::array<std::tuple<const char*, std::string*, int>, 6> angles = {{
                {"--psi", &fl.psi, 0},
                {"--phi1", &fl.phi1, 0},
                {"--phi2", &fl.phi2, 1},
                {"--phi3", &fl.phi3, 0},
                {"--omega1", &fl.omega1, 0},
                {"--omega2", &fl.omega2, 1},
            }};
            for (const auto& [flag, target, slot] : angles) {
                auto* o = sub->add_option(flag, *target, "angle function");
                angle_slots.emplace_back(o, slot);
                angle_values.emplace_back(o, target);
            }
        }
        opt("--t0", fl.t0, "t0", "grid start");
        opt("--t1", fl.t1, "t1", "grid end");
        opt("--samples", fl.samples, "samples", "grid size (>= 2)");
        opt("--format", fl.format, "format", verify ? "json or text" : "csv or json");
        opt("--output", fl.output, "output", "output file (default: standard output)");
        opt("--formula-mode", fl.formula_mode, "formula_mode", "literal, corrected (verify also accepts both)");
        opt("--tol", fl.tol, "tol", "closed-form vs oracle match tolerance");
        if (verify) {
            opt("--suite", fl.suite, "suite", "suite id or all");
            opt("--seed", fl.seed, "seed", "seed for randomized checks");
            strict_opt = sub->add_flag("--strict", fl.strict, "closed-form findings also fail the run");
        }
    };

    CLI::App* eval = app.add_subcommand("eval", "sample a canonical or Smarandache curve");
    CLI::App* frame = app.add_subcommand("frame", "frame vectors, curvatures and residuals");
    CLI::App* smar = app.add_subcommand("smarandache", "sample a Smarandache curve (eval with --kind)");
    CLI::App* verify = app.add_subcommand("verify", "run property suites and the curvature audit");

    // Each subcommand registers its own options; only the parsed one is read.
    std::vector<std::tuple<CLI::App*, decltype(keyed), decltype(angle_slots), decltype(angle_values), CLI::Option*,
                           CLI::Option*>>
        regs;
    for (auto [sub, curve, ver] : {std::tuple{eval, true, false}, std::tuple{frame, true, false},
                                   std::tuple{smar, true, false}, std::tuple{verify, false, true}}) {
        keyed.clear();
        angle_slots.clear();
        angle_values.clear();
        strict_opt = nullptr;
        add_common(sub, curve, ver);
        regs.emplace_back(sub, keyed, angle_slots, angle_values, strict_opt, config_opt);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? kOk : kConfigError;
    }

    try {
        for (auto& [sub, kd, slots, values, sopt, copt] : regs) {
            if (!sub->parsed()) continue;
            Settings s;
            if (copt->count()) s.values = load_config_file(fl.config);
            for (auto& [o, key] : kd) {
                if (!o->count()) continue;
                const std::string k = key;
                if (k == "a") s.values[k] = fl.a;
                else if (k == "m") s.values[k] = fl.m;
                else if (k == "t0") s.values[k] = fl.t0;
                else if (k == "t1") s.values[k] = fl.t1;
                else if (k == "t") s.values[k] = fl.t;
                else if (k == "tol") s.values[k] = fl.tol;
                else if (k == "samples") s.values[k] = fl.samples;
                else if (k == "seed") s.values[k] = fl.seed;
                else s.values[k] = o->as<std::string>();
            }
            for (std::size_t i = 0; i < slots.size(); ++i) {
                if (!slots[i].first->count()) continue;
                json angles = s.values.contains("angles") ? s.values["angles"] : json::array();
                if (!angles.is_array()) throw InvalidConfig("config key 'angles' must be an array");
                while (static_cast<int>(angles.size()) <= slots[i].second) angles.push_back("");
                angles[slots[i].second] = *values[i].second;
                s.values["angles"] = angles;
            }
            if (sopt && sopt->count()) s.values["strict"] = fl.strict;
            check_metric(s);
            if (s.has("formula_mode") && sub != verify) parse_formula_mode(s.get<std::string>("formula_mode", ""));
            if (s.has("tol") && !(s.get<double>("tol", 0) > 0)) throw InvalidConfig("tol must be positive");

            Outcome o;
            if (sub == verify) {
                o = cmd_verify(s);
            } else if (sub == frame) {
                o = cmd_frame(s);
            } else {
                if (sub == smar && !s.has("kind")) throw InvalidConfig("smarandache needs --kind");
                o = cmd_eval(s);
            }
            const int w = write_output(s, o.body, out, err);
            return w != kOk ? w : o.code;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kConfigError;
}

} // namespace nullcone::cli
