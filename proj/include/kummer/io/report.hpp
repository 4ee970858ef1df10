#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "kummer/io/text.hpp"
#include "kummer/kovacic/verdict.hpp"
#include "kummer/numeric/verifier.hpp"

namespace kummer {

inline constexpr const char* report_schema = "kummer-kit/1";

struct VerifySummary {
    double projective_residual = 0.0;
    double closure_residual = 0.0; // max of the composite and inverse residuals

    friend bool operator==(const VerifySummary&, const VerifySummary&) = default;
};

struct Report {
    std::string input;
    std::string R;
    std::string case_label;
    std::string galois;
    std::string certificate_kind = "none";
    std::string certificate_value;
    Equivalences equivalences;
    std::optional<VerifySummary> verify;
    bool inconclusive = false;
    std::map<std::string, double> timings_ms;

    /// Minimal, NotMinimal, Inconclusive or UnsupportedField.
    std::string status() const
    {
        if (case_label == "Case4")
            return "Minimal";
        if (case_label == "Inconclusive" || case_label == "UnsupportedField")
            return case_label;
        return "NotMinimal";
    }

    friend bool operator==(const Report& a, const Report& b)
    {
        auto eq = [](const Equivalences& x, const Equivalences& y) {
            return x.riccati == y.riccati && x.groupoid == y.groupoid && x.galois_sl2 == y.galois_sl2 &&
                   x.strong_minimality == y.strong_minimality && x.liouvillian == y.liouvillian;
        };
        return a.input == b.input && a.R == b.R && a.case_label == b.case_label && a.galois == b.galois &&
               a.certificate_kind == b.certificate_kind && a.certificate_value == b.certificate_value &&
               eq(a.equivalences, b.equivalences) && a.verify == b.verify && a.inconclusive == b.inconclusive &&
               a.timings_ms == b.timings_ms;
    }
};

inline Report make_report(const std::string& input, const MinimalityReport& m)
{
    Report r;
    r.input = input;
    r.R = m.R.to_string();
    r.case_label = std::string(case_name(m.verdict.label));
    r.galois = std::string(m.verdict.galois());
    r.certificate_kind = m.verdict.certificate.kind_name();
    r.certificate_value = m.verdict.certificate.value_text();
    r.equivalences = m.equivalences;
    r.inconclusive = m.inconclusive();
    return r;
}

/// A pole-free unit-length segment on the real or imaginary axis near the
/// origin, tried in a fixed order.
inline NumericPath default_path(const RationalFunction& R)
{
    const auto poles = numeric_poles(R);
    const Complex starts[] = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, {0.0, 0.5}, {0.0, -0.5}};
    const Complex dirs[] = {1.0, -1.0, {0.0, 1.0}, {0.0, -1.0}};
    for (Complex a : starts)
        for (Complex d : dirs) {
            NumericPath p({a, a + d});
            bool clear = true;
            for (const auto& z : poles)
                clear = clear && p.distance_to(z) >= 2 * p.exclusion_radius;
            if (clear)
                return p;
        }
    fail(Errc::SingularEncounter, "no default path avoids the poles; pass one explicitly");
}

/// Projective relation and closure of two fixed near-identity Kummer
/// solutions along the path.
inline VerifySummary run_verification(const RationalFunction& R, const NumericPath& path)
{
    VerifySummary v;
    v.projective_residual = check_projective_relation(R, path).max_residual;
    const Complex x0 = path.start();
    NumericJet j1(x0, x0 + 0.01, {1.02, 0.01});
    NumericJet j2(j1.target(), j1.target() - 0.02, {0.99, -0.02});
    ClosureCheck c = check_groupoid_closure(R, j1, j2, path);
    v.closure_residual = std::max(c.composite_residual, c.inverse_residual);
    return v;
}

inline nlohmann::ordered_json to_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["schema"] = report_schema;
    j["input"] = r.input;
    j["R"] = r.R;
    j["case"] = r.case_label;
    j["galois"] = r.galois;
    j["certificate"] = {{"kind", r.certificate_kind}, {"value", r.certificate_value}};
    j["equivalences"] = {{"riccati", r.equivalences.riccati},
                         {"groupoid", r.equivalences.groupoid},
                         {"galois_sl2", r.equivalences.galois_sl2},
                         {"strong_minimality", r.equivalences.strong_minimality},
                         {"liouvillian", r.equivalences.liouvillian}};
    if (r.verify)
        j["verify"] = {{"projective_residual", r.verify->projective_residual},
                       {"closure_residual", r.verify->closure_residual}};
    else
        j["verify"] = nullptr;
    j["inconclusive"] = r.inconclusive;
    j["timings_ms"] = r.timings_ms;
    return j;
}

inline Report report_from_json(const nlohmann::ordered_json& j)
{
    if (j.at("schema") != report_schema)
        fail(Errc::ParseError, "unknown report schema " + j.at("schema").dump());
    Report r;
    r.input = j.at("input");
    r.R = j.at("R");
    r.case_label = j.at("case");
    r.galois = j.at("galois");
    r.certificate_kind = j.at("certificate").at("kind");
    r.certificate_value = j.at("certificate").at("value");
    const auto& e = j.at("equivalences");
    r.equivalences = {e.at("riccati"), e.at("groupoid"), e.at("galois_sl2"), e.at("strong_minimality"),
                      e.at("liouvillian")};
    if (!j.at("verify").is_null())
        r.verify = VerifySummary{j["verify"].at("projective_residual"), j["verify"].at("closure_residual")};
    r.inconclusive = j.at("inconclusive");
    r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    return r;
}

inline std::string to_text(const Report& r)
{
    std::ostringstream os;
    os << "R = " << r.R << "\n";
    os << "verdict: " << r.status() << " (" << r.case_label;
    if (!r.galois.empty())
        os << ", " << r.galois;
    os << ")\n";
    if (r.certificate_kind != "none")
        os << "certificate: " << r.certificate_kind << (r.certificate_kind == "riccati_solution" ? " u = " : " ")
           << r.certificate_value << "\n";
    const auto& e = r.equivalences;
    os << std::boolalpha << "equivalences: riccati=" << e.riccati << " groupoid=" << e.groupoid
       << " galois_sl2=" << e.galois_sl2 << " strong_minimality=" << e.strong_minimality
       << " liouvillian=" << e.liouvillian << "\n";
    if (r.verify)
        os << "verify: projective_residual=" << r.verify->projective_residual
           << " closure_residual=" << r.verify->closure_residual << "\n";
    if (r.inconclusive)
        os << "inconclusive: the case-3 necessary conditions hold; finite groups are not recognized\n";
    return os.str();
}

} // namespace kummer
