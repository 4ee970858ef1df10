#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kummer/kovacic/search.hpp"
#include "kummer/ode/linear_ode.hpp"
#include "kummer/schwarzian/kummer_system.hpp"

namespace kummer {

enum class CaseLabel { Case1, Case2, Case3, Case4, Inconclusive, UnsupportedField };

constexpr std::string_view case_name(CaseLabel c) noexcept
{
    switch (c) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::Case3: return "Case3";
    case CaseLabel::Case4: return "Case4";
    case CaseLabel::Inconclusive: return "Inconclusive";
    case CaseLabel::UnsupportedField: return "UnsupportedField";
    }
    return "Unknown";
}

/// Label of the differential Galois group in each case; empty when undecided.
constexpr std::string_view galois_tag(CaseLabel c) noexcept
{
    switch (c) {
    case CaseLabel::Case1: return "triangular";
    case CaseLabel::Case2: return "dihedral";
    case CaseLabel::Case3: return "finite-crystallographic";
    case CaseLabel::Case4: return "SL2/PSL2";
    default: return "";
    }
}

struct Certificate {
    enum class Kind { None, RiccatiSolution, MinimalPolynomial };
    Kind kind = Kind::None;
    AlgFunc u;                                  // RiccatiSolution
    std::optional<QuadraticCertificate> quadratic; // MinimalPolynomial

    std::string kind_name() const
    {
        switch (kind) {
        case Kind::RiccatiSolution: return "riccati_solution";
        case Kind::MinimalPolynomial: return "minimal_polynomial";
        default: return "none";
        }
    }

    /// "u = ..." or "u^2 + (p)*u + (q)"; rational data prints in the input grammar.
    std::string value_text() const
    {
        auto text = [](const AlgFunc& f) {
            if (auto q = to_rational_function(f))
                return q->to_string();
            return f.to_string();
        };
        switch (kind) {
        case Kind::RiccatiSolution: return text(u);
        case Kind::MinimalPolynomial: return "u^2 + (" + text(quadratic->p) + ")*u + (" + text(quadratic->q) + ")";
        default: return "";
        }
    }
};

struct CaseVerdict {
    CaseLabel label = CaseLabel::Inconclusive;
    Certificate certificate;
    std::string note;

    std::string_view galois() const { return galois_tag(label); }
};

/// Runs case 1, case 2 and the case-3 screen in that order.
inline CaseVerdict classify(const RationalFunction& R)
{
    CaseVerdict v;
    try {
        if (auto u = case1_search(R)) {
            v.label = CaseLabel::Case1;
            v.certificate.kind = Certificate::Kind::RiccatiSolution;
            v.certificate.u = *u;
            return v;
        }
        if (auto q = case2_search(R)) {
            v.label = CaseLabel::Case2;
            v.certificate.kind = Certificate::Kind::MinimalPolynomial;
            v.certificate.quadratic = *q;
            return v;
        }
    } catch (const Error& e) {
        if (e.code() != Errc::UnsupportedField)
            throw;
        v.label = CaseLabel::UnsupportedField;
        v.note = e.what();
        return v;
    }
    if (case3_screen(R) == Case3Screen::Possible) {
        v.label = CaseLabel::Inconclusive;
        v.note = "case 3 not excluded by the necessary conditions; finite groups are not recognized";
        return v;
    }
    v.label = CaseLabel::Case4;
    return v;
}

/// The five equivalent statements; all hold exactly in case 4.
struct Equivalences {
    bool riccati = false;           // Riccati equation has no algebraic solution
    bool groupoid = false;          // Kummer groupoid is minimal
    bool galois_sl2 = false;        // Galois group is SL2
    bool strong_minimality = false; // Schwarzian equation is strongly minimal
    bool liouvillian = false;       // no Liouvillian solutions

    bool all_equal() const
    {
        return riccati == groupoid && groupoid == galois_sl2 && galois_sl2 == strong_minimality &&
               strong_minimality == liouvillian;
    }
};

/// 2 u(phi) phi' - 2 u(l) - phi''/phi', the order-2 groupoid of maps preserving
/// the affine structure tau''/tau' = -2u.
inline DiffExpr affine_subgroupoid(const RationalFunction& u)
{
    DiffExpr phi = DiffExpr::phi(0), p1 = DiffExpr::phi(1), p2 = DiffExpr::phi(2), l = DiffExpr::lambda();
    return DiffExpr(2) * DiffExpr::apply(u, phi) * p1 - DiffExpr(2) * DiffExpr::apply(u, l) - p2 / p1;
}

/// S(tau) computed from tau''/tau' = -2u: (-2u)' - 1/2 (-2u)^2.
inline RationalFunction schwarzian_from_affine(const RationalFunction& u)
{
    RationalFunction w = RationalFunction(-2) * u;
    return w.derivative() - w * w / RationalFunction(2);
}

struct MinimalityReport {
    RationalFunction R;
    CaseVerdict verdict;
    Equivalences equivalences;
    std::optional<RationalFunction> affine_u;
    std::optional<DiffExpr> subgroupoid;
    bool schwarzian_reduction_verified = false;

    bool minimal() const { return verdict.label == CaseLabel::Case4; }
    bool inconclusive() const { return verdict.label == CaseLabel::Inconclusive; }
};

inline MinimalityReport verdict(const RationalFunction& R)
{
    MinimalityReport rep;
    rep.R = R;
    rep.verdict = classify(R);
    const bool m = rep.minimal();
    rep.equivalences = {m, m, m, m, m};
    if (rep.verdict.label == CaseLabel::Case1) {
        if (auto u = to_rational_function(rep.verdict.certificate.u)) {
            rep.affine_u = *u;
            rep.subgroupoid = affine_subgroupoid(*u);
            rep.schwarzian_reduction_verified = schwarzian_from_affine(*u) == R;
        }
    }
    return rep;
}

/// f = exp(int a) at x0 with f(x0) = 1, through t^N.
inline Series<Rational> exponential_series(const RationalFunction& a, const Rational& x0, std::size_t N)
{
    Series<Rational> as = taylor_expand(a, x0, N + 1);
    Series<Rational> f(N + 1, Rational(0));
    f[0] = 1;
    for (std::size_t k = 0; k < N; ++k) {
        Rational s = 0;
        for (std::size_t i = 0; i <= k; ++i)
            s += as[i] * f[k - i];
        f[k + 1] = s / static_cast<long>(k + 1);
    }
    return f;
}

/// Index of the first nonzero coefficient of the symmetric-power residual of
/// exp(int a) at x0, or -1 when it vanishes through t^(N-3).
inline int first_order_obstruction(const RationalFunction& R, const RationalFunction& a, const Rational& x0, std::size_t N)
{
    LinearODE sym = symmetric_power_2(from_potential(R));
    Series<Rational> res = apply_operator(sym, x0, exponential_series(a, x0, N));
    for (std::size_t k = 0; k < res.size(); ++k)
        if (sgn(res[k]) != 0)
            return static_cast<int>(k);
    return -1;
}

/// Coefficients a with f' = a f inside the symmetric-power solution space:
/// sums of two case-1 Riccati solutions and the case-2 families. Complete
/// outside case 1, where continuous families of such a can occur.
inline std::vector<AlgFunc> first_order_factors(const RationalFunction& R)
{
    std::vector<AlgFunc> out;
    auto add = [&](const AlgFunc& a) {
        for (const auto& e : out)
            if (e == a)
                return;
        out.push_back(a);
    };
    auto us = case1_candidates(R, false);
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = i; j < us.size(); ++j)
            add(us[i] + us[j]);
    for (const auto& phi : case2_phi_candidates(R, false))
        add(phi);
    return out;
}

} // namespace kummer
