// Command-line interface to the two-by-two Lorentz-group library.
//
// Subcommands:
//   verify     run a named check suite and report pass/fail per check
//   classify   classify a four-momentum by the sign of its interval
//   transform  apply a sequence of group elements to a vector or potential
//   contract   sweep the approach of a boosted rotation to its shear limit
//   weinberg   evaluate the gauge-smoothness residual of a product state
//
// Exit codes: 0 success (all checks passed), 1 check or residual failure,
// 2 usage, parse or domain errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lorentz/contraction.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/littlegroup.hpp"
#include "lorentz/minkowski.hpp"
#include "lorentz/report.hpp"
#include "lorentz/spinorstates.hpp"
#include "lorentz/verify.hpp"

namespace {

using lorentz::format_number;
using nlohmann::json;

// Accept either an inline JSON literal or @path-to-file.
json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in)
            throw lorentz::DomainError("cannot open file '" + arg.substr(1) +
                                       "'");
        return json::parse(in);
    }
    return json::parse(arg);
}

double require_number(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw lorentz::DomainError("expected a numeric field \"" + key + "\"");
    return obj[key].get<double>();
}

void reject_unknown_keys(const json& obj,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* key : allowed) ok = ok || item.key() == key;
        if (!ok)
            throw lorentz::DomainError("unexpected field \"" + item.key() +
                                       "\"");
    }
}

lorentz::FourVector parse_vector(const json& obj) {
    if (!obj.is_object())
        throw lorentz::DomainError("a four-vector must be a JSON object");
    reject_unknown_keys(obj, {"t", "z", "x", "y"});
    return {require_number(obj, "t"), require_number(obj, "z"),
            require_number(obj, "x"), require_number(obj, "y")};
}

lorentz::FourPotential parse_potential(const json& obj) {
    if (!obj.is_object())
        throw lorentz::DomainError("a four-potential must be a JSON object");
    reject_unknown_keys(obj, {"a0", "az", "ax", "ay"});
    return {require_number(obj, "a0"), require_number(obj, "az"),
            require_number(obj, "ax"), require_number(obj, "ay")};
}

struct ParsedElement {
    std::string kind;
    double param = 0.0;
    double phi = 0.0;
};

std::vector<ParsedElement> parse_elements(const json& arr) {
    if (!arr.is_array())
        throw lorentz::DomainError("elements must be a JSON array");
    std::vector<ParsedElement> out;
    for (const json& e : arr) {
        if (!e.is_object())
            throw lorentz::DomainError("each element must be a JSON object");
        ParsedElement elem;
        if (!e.contains("kind") || !e["kind"].is_string())
            throw lorentz::DomainError(
                "each element needs a string field \"kind\"");
        elem.kind = e["kind"].get<std::string>();
        if (elem.kind == "gauge") {
            reject_unknown_keys(e, {"kind", "param", "phi"});
            elem.param = require_number(e, "param");
            if (e.contains("phi")) elem.phi = require_number(e, "phi");
        } else {
            reject_unknown_keys(e, {"kind", "param"});
            elem.param = require_number(e, "param");
        }
        out.push_back(elem);
    }
    return out;
}

lorentz::GroupElement element_from(const ParsedElement& elem) {
    if (elem.kind == "rot_z") return lorentz::rot_z(elem.param);
    if (elem.kind == "boost_z") return lorentz::boost_z(elem.param);
    if (elem.kind == "rot_x") return lorentz::rot_x(elem.param);
    if (elem.kind == "rot_y") return lorentz::rot_y(elem.param);
    if (elem.kind == "boost_x") return lorentz::boost_x(elem.param);
    if (elem.kind == "boost_y") return lorentz::boost_y(elem.param);
    if (elem.kind == "gauge") return lorentz::shear(elem.param, elem.phi);
    throw lorentz::DomainError(
        "unknown element kind '" + elem.kind +
        "' (expected rot_z, boost_z, rot_x, rot_y, boost_x, boost_y, gauge)");
}

std::string vector_json(const lorentz::FourVector& v) {
    return "{\"t\": " + format_number(v.t) + ", \"z\": " + format_number(v.z) +
           ", \"x\": " + format_number(v.x) + ", \"y\": " + format_number(v.y) +
           "}";
}

std::string potential_json(const lorentz::FourPotential& p) {
    return "{\"a0\": " + format_number(p.a0) + ", \"az\": " +
           format_number(p.az) + ", \"ax\": " + format_number(p.ax) +
           ", \"ay\": " + format_number(p.ay) + "}";
}

std::string elements_json(const std::vector<ParsedElement>& elems) {
    std::string out = "[";
    bool first = true;
    for (const auto& s : elems) {
        if (!first) out += ", ";
        first = false;
        out += "{\"kind\": \"" + lorentz::json_escape(s.kind) +
               "\", \"param\": " + format_number(s.param);
        if (s.kind == "gauge") out += ", \"phi\": " + format_number(s.phi);
        out += "}";
    }
    return out + "]";
}

void print_vector_text(const lorentz::FourVector& v) {
    std::printf("t = %s\nz = %s\nx = %s\ny = %s\n", format_number(v.t).c_str(),
                format_number(v.z).c_str(), format_number(v.x).c_str(),
                format_number(v.y).c_str());
}

void print_potential_text(const lorentz::FourPotential& p) {
    std::printf("a0 = %s\naz = %s\nax = %s\nay = %s\n",
                format_number(p.a0).c_str(), format_number(p.az).c_str(),
                format_number(p.ax).c_str(), format_number(p.ay).c_str());
}

int run_verify(const std::string& suite, bool as_json, double tol,
               std::uint64_t seed) {
    lorentz::VerifyOptions options;
    options.seed = seed;
    options.tol_override = tol;
    const lorentz::Report report = lorentz::run_suite(suite, options);
    if (as_json)
        std::cout << lorentz::to_json(report) << "\n";
    else
        std::cout << lorentz::to_text(report);
    return report.all_passed() ? 0 : 1;
}

int run_classify(double t, double z, double x, double y, bool as_json,
                 double tol) {
    const lorentz::FourVector v{t, z, x, y};
    const lorentz::Classification cls = lorentz::classify(v, tol);
    const lorentz::Mat2 standard = lorentz::standard_momentum(cls.orbit);
    // Standard momentum matrices are real, so a plain nested array suffices.
    const std::string standard_json =
        "[[" + format_number(standard.m00.real()) + ", " +
        format_number(standard.m01.real()) + "], [" +
        format_number(standard.m10.real()) + ", " +
        format_number(standard.m11.real()) + "]]";
    const lorentz::FourVector fixed_un = lorentz::vector_from_matrix(
        lorentz::fixed_momentum(cls.orbit, lorentz::Flavor::Undotted));
    const lorentz::FourVector fixed_dot = lorentz::vector_from_matrix(
        lorentz::fixed_momentum(cls.orbit, lorentz::Flavor::Dotted));
    if (as_json) {
        std::cout << "{\"input\": " << vector_json(v)
                  << ", \"interval\": " << format_number(cls.interval)
                  << ", \"class\": \"" << lorentz::orbit_name(cls.orbit)
                  << "\", \"tolerance\": " << format_number(tol)
                  << ", \"standard_matrix\": " << standard_json
                  << ", \"fixed_momentum\": {\"undotted\": "
                  << vector_json(fixed_un)
                  << ", \"dotted\": " << vector_json(fixed_dot) << "}}\n";
    } else {
        std::printf("interval = %s\nclass = %s\n",
                    format_number(cls.interval).c_str(),
                    lorentz::orbit_name(cls.orbit));
        std::printf("standard matrix = %s\n", standard_json.c_str());
        std::printf("fixed momentum (undotted): t = %s, z = %s, x = %s, y = %s\n",
                    format_number(fixed_un.t).c_str(),
                    format_number(fixed_un.z).c_str(),
                    format_number(fixed_un.x).c_str(),
                    format_number(fixed_un.y).c_str());
        std::printf("fixed momentum (dotted):   t = %s, z = %s, x = %s, y = %s\n",
                    format_number(fixed_dot.t).c_str(),
                    format_number(fixed_dot.z).c_str(),
                    format_number(fixed_dot.x).c_str(),
                    format_number(fixed_dot.y).c_str());
    }
    return 0;
}

int run_transform(const std::string& vector_arg,
                  const std::string& potential_arg,
                  const std::string& elements_arg,
                  std::optional<double> boost_limit_eta, bool as_json,
                  double tol) {
    const std::vector<ParsedElement> elems =
        parse_elements(parse_json_arg(elements_arg));
    const double condition_tol = tol > 0.0 ? tol : 1e-9;
    const double limit_tol = tol > 0.0 ? tol : 1e-8;

    if (!vector_arg.empty()) {
        lorentz::FourVector v = parse_vector(parse_json_arg(vector_arg));
        const lorentz::FourVector input = v;
        for (const auto& elem : elems)
            v = lorentz::apply(element_from(elem), v);
        if (as_json) {
            std::cout << "{\"input\": {\"vector\": " << vector_json(input)
                      << "}, \"elements\": " << elements_json(elems)
                      << ", \"output\": {\"vector\": " << vector_json(v)
                      << "}, \"diagnostics\": {\"interval_before\": "
                      << format_number(input.interval())
                      << ", \"interval_after\": " << format_number(v.interval())
                      << "}}\n";
        } else {
            print_vector_text(v);
            std::printf("interval: before = %s, after = %s\n",
                        format_number(input.interval()).c_str(),
                        format_number(v.interval()).c_str());
        }
        return 0;
    }

    lorentz::FourPotential p = parse_potential(parse_json_arg(potential_arg));
    const lorentz::FourPotential input = p;
    for (const auto& elem : elems) {
        if (elem.kind == "gauge") {
            // The gauge action on a potential needs the light-front
            // condition; check it, then use the exact component form.
            const double scale = std::max(
                {1.0, std::abs(p.a0), std::abs(p.az), std::abs(p.ax),
                 std::abs(p.ay)});
            if (lorentz::lorentz_condition_defect(p) > condition_tol * scale)
                throw lorentz::LorentzConditionViolated(
                    "gauge transformation requires a0 = az (defect " +
                    format_number(lorentz::lorentz_condition_defect(p)) + ")");
            p = lorentz::gauge_transform(p, elem.param, elem.phi);
        } else {
            p = lorentz::apply(element_from(elem), p);
        }
    }
    std::string limit_json;
    if (boost_limit_eta) {
        const lorentz::BoostLimitResult r =
            lorentz::boost_limit(p, *boost_limit_eta, limit_tol);
        p = r.potential;
        limit_json = ", \"boost_limit\": {\"eta\": " +
                     format_number(*boost_limit_eta) +
                     ", \"tolerance\": " + format_number(limit_tol) +
                     ", \"dropped_norm\": " + format_number(r.dropped_norm) +
                     "}";
    }
    if (as_json) {
        std::cout << "{\"input\": {\"potential\": " << potential_json(input)
                  << "}, \"elements\": " << elements_json(elems) << limit_json
                  << ", \"output\": {\"potential\": " << potential_json(p)
                  << "}, \"diagnostics\": {\"delta_ax\": "
                  << format_number(p.ax - input.ax)
                  << ", \"delta_ay\": " << format_number(p.ay - input.ay)
                  << "}}\n";
    } else {
        print_potential_text(p);
        std::printf("delta: ax = %s, ay = %s\n",
                    format_number(p.ax - input.ax).c_str(),
                    format_number(p.ay - input.ay).c_str());
    }
    return 0;
}

int run_contract(double gamma, double phi, double eta_min, double eta_max,
                 int steps, bool as_json, bool as_csv) {
    const auto points =
        lorentz::contraction_sweep(gamma, phi, eta_min, eta_max, steps);
    // The log fit is undefined when a deviation vanishes (e.g. gamma = 0);
    // report the table without a fit in that case.
    std::optional<lorentz::LineFit> fit;
    try {
        fit = lorentz::fit_log_deviation(points);
    } catch (const lorentz::DomainError&) {
    }
    const std::string fit_json =
        fit ? "{\"slope\": " + format_number(fit->slope) +
                  ", \"intercept\": " + format_number(fit->intercept) + "}"
            : "null";
    const std::string fit_text =
        fit ? "fit: slope = " + format_number(fit->slope) +
                  ", intercept = " + format_number(fit->intercept)
            : "fit: undefined (non-positive deviations)";
    if (as_json) {
        std::string body;
        for (const auto& pt : points) {
            if (!body.empty()) body += ", ";
            body += "{\"eta\": " + format_number(pt.eta) +
                    ", \"theta\": " + format_number(pt.theta) +
                    ", \"deviation\": " + format_number(pt.deviation) + "}";
        }
        std::cout << "{\"gamma\": " << format_number(gamma)
                  << ", \"phi\": " << format_number(phi) << ", \"points\": ["
                  << body << "], \"fit\": " << fit_json << "}\n";
    } else if (as_csv) {
        std::printf("eta,theta,deviation\n");
        for (const auto& pt : points)
            std::printf("%s,%s,%s\n", format_number(pt.eta).c_str(),
                        format_number(pt.theta).c_str(),
                        format_number(pt.deviation).c_str());
        std::fprintf(stderr, "%s\n", fit_text.c_str());
    } else {
        std::printf("%-8s %-22s %s\n", "eta", "theta", "deviation");
        for (const auto& pt : points)
            std::printf("%-8s %-22s %s\n", format_number(pt.eta).c_str(),
                        format_number(pt.theta).c_str(),
                        format_number(pt.deviation).c_str());
        std::printf("%s\n", fit_text.c_str());
    }
    return 0;
}

int run_weinberg(const std::string& state_text, bool as_json, double tol) {
    const lorentz::MultiSpinorState state = lorentz::parse_state(state_text);
    double residual_n[2];
    for (int i = 0; i < 2; ++i)
        residual_n[i] =
            lorentz::apply_generator(
                lorentz::gauge_generator(i + 1, lorentz::Flavor::Undotted),
                lorentz::gauge_generator(i + 1, lorentz::Flavor::Dotted),
                state)
                .norm();
    const double residual = lorentz::gauge_smoothness_residual(state);
    const bool pass = residual <= tol;
    const std::string normalized =
        state.terms().begin()->first.to_string();
    if (as_json) {
        std::cout << "{\"state\": \"" << lorentz::json_escape(normalized)
                  << "\", \"residual_n1\": " << format_number(residual_n[0])
                  << ", \"residual_n2\": " << format_number(residual_n[1])
                  << ", \"residual\": " << format_number(residual)
                  << ", \"tolerance\": " << format_number(tol)
                  << ", \"status\": \"" << (pass ? "pass" : "fail")
                  << "\"}\n";
    } else {
        std::printf(
            "state: %s\nresidual_n1 = %s\nresidual_n2 = %s\n"
            "residual = %s\ntolerance = %s\nstatus: %s\n",
            normalized.c_str(), format_number(residual_n[0]).c_str(),
            format_number(residual_n[1]).c_str(),
            format_number(residual).c_str(), format_number(tol).c_str(),
            pass ? "pass" : "fail");
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Two-by-two Lorentz group toolkit: little groups, group "
        "contraction and multi-spinor electromagnetic states"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    double tol = -1.0;
    std::uint64_t seed = 12345;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--tol", tol,
                   "tolerance override (default depends on the subcommand)");
    app.add_option("--seed", seed,
                   "seed for randomized checks (default 12345)");

    auto* verify = app.add_subcommand(
        "verify", "run a named check suite and report each check");
    std::string suite = "all";
    verify
        ->add_option("suite", suite,
                     "algebra, littlegroup, contraction, spinors or all")
        ->check(CLI::IsMember(lorentz::suite_names()));

    auto* classify = app.add_subcommand(
        "classify", "classify a four-momentum t z x y by its interval");
    double ct = 0.0, cz = 0.0, cx = 0.0, cy = 0.0;
    classify->add_option("t", ct, "time component")->required();
    classify->add_option("z", cz, "z component")->required();
    classify->add_option("x", cx, "x component")->required();
    classify->add_option("y", cy, "y component")->required();

    auto* transform = app.add_subcommand(
        "transform",
        "apply group elements to a four-vector or four-potential");
    std::string vector_arg, potential_arg, elements_arg = "[]";
    std::optional<double> boost_limit_eta;
    auto* vec_opt = transform->add_option(
        "--vector", vector_arg,
        "four-vector JSON {\"t\":..,\"z\":..,\"x\":..,\"y\":..} or @file");
    auto* pot_opt = transform->add_option(
        "--potential", potential_arg,
        "four-potential JSON {\"a0\":..,\"az\":..,\"ax\":..,\"ay\":..} or "
        "@file");
    transform->add_option(
        "--elements", elements_arg,
        "JSON array of elements {\"kind\":..,\"param\":..[,\"phi\":..]} or "
        "@file (kinds: rot_z, boost_z, rot_x, rot_y, boost_x, boost_y, "
        "gauge)");
    transform->add_option(
        "--boost-limit", boost_limit_eta,
        "after the elements, take the rescaled large-boost limit at this "
        "rapidity (potentials only)");
    vec_opt->excludes(pot_opt);
    pot_opt->excludes(vec_opt);

    auto* contract = app.add_subcommand(
        "contract",
        "sweep the deviation of the boosted rotation from its shear limit");
    double gamma = 0.0, phi = 0.0, eta_min = 3.0, eta_max = 8.0;
    int steps = 11;
    bool as_csv = false;
    contract->add_option("--gamma", gamma, "shear strength")->required();
    contract->add_option("--phi", phi, "shear phase (default 0)");
    contract->add_option("--eta-min", eta_min, "lowest rapidity (default 3)");
    contract->add_option("--eta-max", eta_max, "highest rapidity (default 8)");
    contract->add_option("--steps", steps, "number of samples (default 11)");
    contract->add_flag("--csv", as_csv,
                       "CSV table on stdout, fit line on stderr");

    auto* weinberg = app.add_subcommand(
        "weinberg",
        "gauge-smoothness residual of a product state (tokens u, v, ud, vd)");
    std::string state_text;
    weinberg->add_option("state", state_text, "e.g. uu, vdvd, uv, 'u v ud'")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(suite, as_json, tol, seed);
        if (classify->parsed())
            return run_classify(ct, cz, cx, cy, as_json,
                                tol > 0.0 ? tol : 1e-9);
        if (transform->parsed()) {
            if (vector_arg.empty() && potential_arg.empty())
                throw lorentz::DomainError(
                    "transform needs --vector or --potential");
            if (boost_limit_eta && potential_arg.empty())
                throw lorentz::DomainError(
                    "--boost-limit applies to potentials only");
            return run_transform(vector_arg, potential_arg, elements_arg,
                                 boost_limit_eta, as_json, tol);
        }
        if (contract->parsed())
            return run_contract(gamma, phi, eta_min, eta_max, steps, as_json,
                                as_csv);
        if (weinberg->parsed())
            return run_weinberg(state_text, as_json, tol > 0.0 ? tol : 1e-12);
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: invalid JSON: %s\n", e.what());
        return 2;
    } catch (const lorentz::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const lorentz::LorentzConditionViolated& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const lorentz::InsufficientBoost& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
