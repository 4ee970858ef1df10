#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kummer/io/report.hpp"
#include "kummer/kummer.hpp"

using namespace kummer;

namespace {

enum Exit { Ok = 0, ParseFailure = 2, Unsupported = 3, ResidualTooLarge = 4, Internal = 1 };

double tolerance()
{
    if (const char* t = std::getenv("KUMMER_KIT_TOL")) {
        char* end = nullptr;
        double v = std::strtod(t, &end);
        if (end != t && *end == '\0' && v > 0)
            return v;
        std::cerr << "ignoring KUMMER_KIT_TOL=" << t << "\n";
    }
    return 1e-6;
}

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_verdict(const std::string& input, bool verify, bool json, const std::string& path_text)
{
    RationalFunction R = parse_rational_function(input);
    std::optional<NumericPath> path;
    if (!path_text.empty())
        path = parse_path(path_text);

    auto t0 = std::chrono::steady_clock::now();
    MinimalityReport m = verdict(R);
    Report rep = make_report(input, m);
    rep.timings_ms["verdict"] = ms_since(t0);

    int code = Ok;
    if (m.verdict.label == CaseLabel::UnsupportedField)
        code = Unsupported;
    if (verify) {
        auto t1 = std::chrono::steady_clock::now();
        const double tol = tolerance();
        NumericPath p = path ? *path : default_path(R);
        p.integrator.atol = p.integrator.rtol = std::clamp(tol * 1e-4, 1e-13, 1e-10);
        rep.verify = run_verification(R, p);
        rep.timings_ms["verify"] = ms_since(t1);
        if (code == Ok && (rep.verify->projective_residual > tol || rep.verify->closure_residual > tol))
            code = ResidualTooLarge;
    }

    if (json) {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        std::cout << to_text(rep);
        if (m.subgroupoid)
            std::cout << "subgroupoid: " << m.subgroupoid->to_string() << " = 0\n";
        if (!m.verdict.note.empty() && m.verdict.label == CaseLabel::UnsupportedField)
            std::cout << "note: " << m.verdict.note << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kummer groupoid minimality and Galois case analysis for S(phi) + R(phi) phi'^2 = R(l)"};
    app.require_subcommand(1);

    std::string R_text, path_text, f_text, g_text;
    bool verify = false, json = false, linearize = false;

    auto* v = app.add_subcommand("verdict", "classify R and report the five equivalent statements");
    v->add_option("-R", R_text, "rational function of l, e.g. \"-2*(1+l^2)\"")->required();
    v->add_flag("--verify", verify, "run the numeric projective-relation and closure checks");
    v->add_flag("--json", json, "print a kummer-kit/1 JSON report");
    v->add_option("--path", path_text, "waypoints for --verify, e.g. \"0;1;1+0.5i\"");

    auto* s = app.add_subcommand("sympow", "second symmetric power of psi'' + R/2 psi = 0");
    s->add_option("-R", R_text, "rational function of l")->required();

    auto* k = app.add_subcommand("kummer", "Kummer residual of R");
    k->add_option("-R", R_text, "rational function of l")->required();
    k->add_flag("--linearize", linearize, "print the linearization along identity jets");

    auto* j = app.add_subcommand("jet", "exact jet arithmetic, jets written source,target;c1,c2,...");
    j->require_subcommand(1);
    auto* jc = j->add_subcommand("compose", "g o f");
    jc->add_option("--f", f_text, "inner jet")->required();
    jc->add_option("--g", g_text, "outer jet")->required();
    auto* ji = j->add_subcommand("invert", "f^-1");
    ji->add_option("--f", f_text, "jet")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? Ok : ParseFailure;
    }

    try {
        if (v->parsed())
            return cmd_verdict(R_text, verify, json, path_text);
        if (s->parsed()) {
            std::cout << symmetric_power_2(from_potential(parse_rational_function(R_text))).to_string() << "\n";
            return Ok;
        }
        if (k->parsed()) {
            KummerSystem ks = kummer_build(parse_rational_function(R_text));
            if (linearize)
                std::cout << ks.linearized.to_string() << "\n";
            else
                std::cout << ks.residual.to_string() << " = 0\n";
            return Ok;
        }
        if (jc->parsed()) {
            ExactJet f = parse_jet(f_text), g = parse_jet(g_text);
            std::cout << compose(g, f).to_string() << "\n";
            return Ok;
        }
        if (ji->parsed()) {
            std::cout << invert(parse_jet(f_text)).to_string() << "\n";
            return Ok;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
        case Errc::ParseError: return ParseFailure;
        case Errc::UnsupportedField: return Unsupported;
        default: return Internal;
        }
    }
    return Ok;
}
