#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kummer/algebra/factor.hpp"
#include "kummer/numeric/rk45.hpp"
#include "kummer/ode/linear_ode.hpp"
#include "kummer/schwarzian/kummer_system.hpp"
#include "kummer/schwarzian/mobius.hpp"

namespace kummer {

/// Straight segments between complex waypoints, parametrized by s in
/// [0, segments]; segment k is s in [k, k+1].
struct NumericPath {
    std::vector<Complex> waypoints;
    double exclusion_radius = 0.1;
    std::size_t samples_per_segment = 16;
    IntegratorOptions integrator;

    NumericPath() = default;
    NumericPath(std::vector<Complex> w) : waypoints(std::move(w))
    {
        if (waypoints.size() < 2)
            fail(Errc::InvalidArgument, "a path needs at least two waypoints");
    }

    std::size_t segments() const { return waypoints.size() - 1; }
    Complex start() const { return waypoints.front(); }

    Complex point(double s) const
    {
        std::size_t k = std::min(static_cast<std::size_t>(std::max(s, 0.0)), segments() - 1);
        return waypoints[k] + (s - static_cast<double>(k)) * (waypoints[k + 1] - waypoints[k]);
    }

    /// Distance from p to the polyline.
    double distance_to(Complex p) const
    {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < segments(); ++k) {
            Complex a = waypoints[k], d = waypoints[k + 1] - a;
            double t = std::norm(d) == 0.0 ? 0.0 : std::clamp(((p - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
            best = std::min(best, std::abs(p - (a + t * d)));
        }
        return best;
    }

    void check_poles(const std::vector<Complex>& poles) const
    {
        for (const auto& p : poles)
            if (distance_to(p) < exclusion_radius)
                fail(Errc::SingularEncounter, "path passes within " + std::to_string(exclusion_radius) +
                                                  " of the pole " + std::to_string(p.real()) + "+" +
                                                  std::to_string(p.imag()) + "i");
    }
};

inline std::vector<Complex> numeric_poles(const RationalFunction& R) { return numeric_roots(R.den()); }

inline Complex eval_c(const RationalFunction& f, Complex x) { return f.eval(x); }

struct NumericSample {
    double s = 0.0;
    Complex x;
    std::vector<Complex> values; // value and derivatives
    double error = 0.0;          // local error estimate of the step that reached this sample
    double residual = 0.0;
};

struct NumericSolution {
    std::vector<std::string> columns;
    std::vector<NumericSample> samples;

    double max_residual() const
    {
        double m = 0.0;
        for (const auto& s : samples)
            m = std::max(m, s.residual);
        return m;
    }

    void write_csv(std::ostream& os) const
    {
        os << "s,re_x,im_x";
        for (const auto& c : columns)
            os << ",re_" << c << ",im_" << c;
        os << ",residual\n";
        os.precision(17);
        for (const auto& s : samples) {
            os << s.s << ',' << s.x.real() << ',' << s.x.imag();
            for (const auto& v : s.values)
                os << ',' << v.real() << ',' << v.imag();
            os << ',' << s.residual << '\n';
        }
    }
};

struct PathRecord {
    double s;
    Complex x;
    State y;
    double error;
};

/// Integrates dy/dx = rhs(x, y) along the path, segment by segment; the first
/// record is the initial point.
template <class Rhs>
std::vector<PathRecord> integrate_path(Rhs&& rhs, const NumericPath& path, State y0)
{
    std::vector<PathRecord> out{{0.0, path.start(), y0, 0.0}};
    for (std::size_t k = 0; k < path.segments(); ++k) {
        const Complex a = path.waypoints[k], v = path.waypoints[k + 1] - a;
        const double s0 = static_cast<double>(k);
        std::vector<double> stops;
        for (std::size_t i = 1; i <= path.samples_per_segment; ++i)
            stops.push_back(s0 + static_cast<double>(i) / static_cast<double>(path.samples_per_segment));
        auto f = [&](double s, const State& y) {
            State d = rhs(a + (s - s0) * v, y);
            for (auto& e : d)
                e *= v;
            return d;
        };
        for (auto& r : dopri45(f, s0, s0 + 1.0, out.back().y, path.integrator, stops))
            out.push_back({r.s, path.point(r.s), std::move(r.y), r.error});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Nonlinear Schwarzian foliation: lambda(tau) with S_tau(lambda) + lambda_t^2 R(lambda) = 0

struct NumericOptions {
    double singular_threshold = 1e-8;
};

/// initial: (tau0 -> lambda0; lambda_t, lambda_tt); the path lives in the tau plane.
inline NumericSolution integrate_foliation(const RationalFunction& R, const NumericJet& initial, const NumericPath& path,
                                           NumericOptions opt = {})
{
    if (initial.order() != 2)
        fail(Errc::WrongOrder, "foliation needs (lambda, lambda_t, lambda_tt)");
    if (std::abs(initial.source() - path.start()) > 1e-12)
        fail(Errc::InvalidArgument, "path must start at the source of the initial jet");
    const DiffExpr third = foliation_rhs(-R);
    auto lambda3 = [&](Complex tau, const State& y) {
        if (std::abs(y[1]) < opt.singular_threshold)
            fail(Errc::SingularEncounter, "lambda_t vanishes along the path");
        return evaluate(third, JetEnv<Complex>{tau, {y[0], y[1], y[2]}});
    };
    auto rhs = [&](Complex tau, const State& y) { return State{y[1], y[2], lambda3(tau, y)}; };
    State y0{initial.target(), initial.derivative(1), initial.derivative(2)};
    NumericSolution sol{{"lambda", "lambda_t", "lambda_tt", "lambda_ttt"}, {}};
    for (auto& r : integrate_path(rhs, path, y0)) {
        Complex l3 = lambda3(r.x, r.y);
        NumericJet j(r.x, r.y[0], {r.y[1], r.y[2], l3});
        double res = std::abs(schwarzian_jet(j) + r.y[1] * r.y[1] * eval_c(R, r.y[0]));
        sol.samples.push_back({r.s, r.x, {r.y[0], r.y[1], r.y[2], l3}, r.error, res});
    }
    return sol;
}

// ---------------------------------------------------------------------------
// Companion system psi'' = -R/2 psi

using Matrix2c = std::array<std::array<Complex, 2>, 2>;

struct CompanionSolution {
    NumericSolution psi1;
    NumericSolution psi2;
    double wronskian_drift = 0.0; // max relative change of psi1 psi2' - psi2 psi1'
};

/// initial = [[psi1, psi2], [psi1', psi2']] at the start of the path.
inline CompanionSolution integrate_companion(const RationalFunction& R, const Matrix2c& initial, const NumericPath& path)
{
    path.check_poles(numeric_poles(R));
    const Complex w0 = initial[0][0] * initial[1][1] - initial[0][1] * initial[1][0];
    if (std::abs(w0) < 1e-14)
        fail(Errc::NotInvertible, "initial fundamental matrix is singular");
    const RationalFunction half = R / RationalFunction(2), half1 = half.derivative();
    auto rhs = [&](Complex x, const State& y) {
        Complex h = eval_c(half, x);
        return State{y[1], -h * y[0], y[3], -h * y[2]};
    };
    State y0{initial[0][0], initial[1][0], initial[0][1], initial[1][1]};
    CompanionSolution out;
    out.psi1.columns = out.psi2.columns = {"psi", "psi_1", "psi_2", "psi_3"};
    for (auto& r : integrate_path(rhs, path, y0)) {
        Complex h = eval_c(half, r.x), h1 = eval_c(half1, r.x);
        Complex w = r.y[0] * r.y[3] - r.y[2] * r.y[1];
        double drift = std::abs(w - w0) / std::abs(w0);
        out.wronskian_drift = std::max(out.wronskian_drift, drift);
        out.psi1.samples.push_back({r.s, r.x, {r.y[0], r.y[1], -h * r.y[0], -h1 * r.y[0] - h * r.y[1]}, r.error, drift});
        out.psi2.samples.push_back({r.s, r.x, {r.y[2], r.y[3], -h * r.y[2], -h1 * r.y[2] - h * r.y[3]}, r.error, drift});
    }
    return out;
}

namespace detail {

inline Series<Complex> taylor3(const std::vector<Complex>& d)
{
    return Series<Complex>(std::vector<Complex>{d[0], d[1], d[2] / 2.0, d[3] / 6.0});
}

} // namespace detail

struct ProjectiveCheck {
    double max_residual = 0.0;
    NumericSolution tau; // tau = psi1/psi2 with derivatives; residual |S(tau) - R|
};

/// tau = psi1/psi2 from psi1 = (0, 1), psi2 = (1, 0) at the start of the path,
/// optionally moved by a Mobius map, checked against S_l(tau) = R(l).
/// psi2 counts as vanishing where |psi2| < zero_threshold (|psi1| + |psi2|);
/// between samples both are followed by their cubic Taylor polynomials.
inline ProjectiveCheck check_projective_relation(const RationalFunction& R, const NumericPath& path,
                                                 const std::optional<BasicMobius<Complex>>& g = std::nullopt,
                                                 double zero_threshold = 1e-3)
{
    Matrix2c m{{{Complex(0), Complex(1)}, {Complex(1), Complex(0)}}};
    CompanionSolution c = integrate_companion(R, m, path);
    ProjectiveCheck out;
    out.tau.columns = {"tau", "tau_1", "tau_2", "tau_3"};
    auto small = [&](Complex p1, Complex p2) { return std::abs(p2) < zero_threshold * (std::abs(p1) + std::abs(p2)); };
    for (std::size_t i = 0; i < c.psi1.samples.size(); ++i) {
        const auto& a = c.psi1.samples[i];
        const auto& b = c.psi2.samples[i];
        if (small(a.values[0], b.values[0]))
            fail(Errc::ZeroDenominatorOnPath, "psi2 vanishes on the path");
        if (i + 1 < c.psi1.samples.size()) {
            Poly<Complex> pa(detail::taylor3(a.values).coeffs()), pb(detail::taylor3(b.values).coeffs());
            const Complex h = c.psi1.samples[i + 1].x - a.x;
            std::vector<double> thetas;
            for (int k = 1; k < 8; ++k)
                thetas.push_back(k / 8.0);
            for (const auto& z : numeric_roots(pb))
                thetas.push_back(std::clamp((z * std::conj(h)).real() / std::norm(h), 0.0, 1.0));
            for (double t : thetas)
                if (small(pa.eval(h * t), pb.eval(h * t)))
                    fail(Errc::ZeroDenominatorOnPath, "psi2 vanishes on the path");
        }
        Series<Complex> t = detail::taylor3(a.values) / detail::taylor3(b.values);
        NumericJet j = NumericJet::from_taylor(a.x, t[0], t);
        if (g)
            j = mobius_apply_jet(*g, j);
        double res = std::abs(schwarzian_jet(j) - eval_c(R, a.x));
        out.max_residual = std::max(out.max_residual, res);
        out.tau.samples.push_back({a.s, a.x, {j.target(), j.derivative(1), j.derivative(2), j.derivative(3)}, a.error, res});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kummer equation S(phi) + R(phi) phi'^2 = R(l)

namespace detail {

inline Complex kummer_third(const RationalFunction& R, Complex x, Complex p, Complex p1, Complex p2, double thr)
{
    if (std::abs(p1) < thr)
        fail(Errc::SingularEncounter, "phi' vanishes along the path");
    return 1.5 * p2 * p2 / p1 + p1 * (eval_c(R, x) - eval_c(R, p) * p1 * p1);
}

} // namespace detail

/// initial: (x0 -> phi(x0); phi', phi'').
inline NumericSolution integrate_kummer(const RationalFunction& R, const NumericJet& initial, const NumericPath& path,
                                        NumericOptions opt = {})
{
    if (initial.order() != 2)
        fail(Errc::WrongOrder, "Kummer initial data is (phi, phi', phi'')");
    path.check_poles(numeric_poles(R));
    auto rhs = [&](Complex x, const State& y) {
        return State{y[1], y[2], detail::kummer_third(R, x, y[0], y[1], y[2], opt.singular_threshold)};
    };
    const DiffExpr cleared = kummer_cleared(R);
    NumericSolution sol{{"phi", "phi_1", "phi_2", "phi_3"}, {}};
    for (auto& r : integrate_path(rhs, path, {initial.target(), initial.derivative(1), initial.derivative(2)})) {
        Complex p3 = detail::kummer_third(R, r.x, r.y[0], r.y[1], r.y[2], opt.singular_threshold);
        NumericJet j(r.x, r.y[0], {r.y[1], r.y[2], p3});
        double res = std::abs(evaluate(cleared, jet_env(j)));
        sol.samples.push_back({r.s, r.x, {r.y[0], r.y[1], r.y[2], p3}, r.error, res});
    }
    return sol;
}

struct ClosureCheck {
    double composite_residual = 0.0;
    double inverse_residual = 0.0;
    NumericSolution composite;
};

/// Integrates phi1 from j1 along the path and phi2 from j2 along the image
/// curve phi1(path) jointly, then measures the Kummer residual (cleared form)
/// of phi2 o phi1 and of phi1^-1 at every sample.
inline ClosureCheck check_groupoid_closure(const RationalFunction& R, const NumericJet& j1, const NumericJet& j2,
                                           const NumericPath& path, NumericOptions opt = {})
{
    if (j1.order() != 2 || j2.order() != 2)
        fail(Errc::WrongOrder, "Kummer initial data is (phi, phi', phi'')");
    if (std::abs(j2.source() - j1.target()) > 1e-9 * std::max(1.0, std::abs(j1.target())))
        fail(Errc::DomainMismatch, "second jet must start where the first one lands");
    if (std::abs(j1.source() - path.start()) > 1e-12)
        fail(Errc::InvalidArgument, "path must start at the source of the first jet");
    const auto poles = numeric_poles(R);
    path.check_poles(poles);
    auto rhs = [&](Complex x, const State& y) {
        const Complex mu = y[0];
        for (const auto& p : poles)
            if (std::abs(mu - p) < path.exclusion_radius)
                fail(Errc::DomainMismatch, "inner solution carries the path near a pole of R");
        Complex a3 = detail::kummer_third(R, x, y[0], y[1], y[2], opt.singular_threshold);
        Complex b3 = detail::kummer_third(R, mu, y[3], y[4], y[5], opt.singular_threshold);
        return State{y[1], y[2], a3, y[4] * y[1], y[5] * y[1], b3 * y[1]};
    };
    State y0{j1.target(), j1.derivative(1), j1.derivative(2), j2.target(), j2.derivative(1), j2.derivative(2)};
    const DiffExpr cleared = kummer_cleared(R);
    ClosureCheck out;
    out.composite.columns = {"phi", "phi_1", "phi_2", "phi_3"};
    for (auto& r : integrate_path(rhs, path, y0)) {
        const Complex mu = r.y[0];
        NumericJet a(r.x, mu, {r.y[1], r.y[2], detail::kummer_third(R, r.x, r.y[0], r.y[1], r.y[2], opt.singular_threshold)});
        NumericJet b(mu, r.y[3], {r.y[4], r.y[5], detail::kummer_third(R, mu, r.y[3], r.y[4], r.y[5], opt.singular_threshold)});
        NumericJet c = compose(b, a);
        double rc = std::abs(evaluate(cleared, jet_env(c)));
        double ri = std::abs(evaluate(cleared, jet_env(invert(a))));
        out.composite_residual = std::max(out.composite_residual, rc);
        out.inverse_residual = std::max(out.inverse_residual, ri);
        out.composite.samples.push_back(
            {r.s, r.x, {c.target(), c.derivative(1), c.derivative(2), c.derivative(3)}, r.error, std::max(rc, ri)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Flow of f(l) d/dl against the Kummer equation

struct FlowTangency {
    double slope = 0.0;
    std::vector<double> epsilons;
    std::vector<double> residuals;
    double linearized_residual = 0.0; // |f''' + 2R f' + R' f| at the base point
    bool exact_symmetry = false;      // residuals at rounding level; slope meaningless
};

/// The 3-jet at f.base of the time-eps flow of the vector field whose Taylor
/// polynomial (to the order of f) is given, obtained from the flow and its
/// first three variational equations.
inline NumericJet flow_jet(const JetVectorField<Complex>& f, double eps, IntegratorOptions opt = {1e-14, 1e-14})
{
    if (f.order() < 3)
        fail(Errc::OrderTooLow, "flow 3-jets need the 3-jet of the vector field");
    Poly<Complex> p0(f.taylor().coeffs());
    Poly<Complex> p1 = p0.derivative(), p2 = p1.derivative(), p3 = p2.derivative();
    const Complex x0 = f.base;
    auto rhs = [&](double, const State& y) {
        Complex t = y[0] - x0;
        Complex a0 = p0.eval(t), a1 = p1.eval(t), a2 = p2.eval(t), a3 = p3.eval(t);
        return State{a0, a1 * y[1], a2 * y[1] * y[1] + a1 * y[2],
                     a3 * y[1] * y[1] * y[1] + 3.0 * a2 * y[1] * y[2] + a1 * y[3]};
    };
    opt.initial_step = std::min(opt.initial_step, eps / 4);
    auto rec = dopri45(rhs, 0.0, eps, State{x0, 1.0, 0.0, 0.0}, opt, {eps});
    const State& y = rec.back().y;
    return NumericJet(x0, y[0], {y[1], y[2], y[3]});
}

inline FlowTangency check_flow_tangency(const RationalFunction& R, const JetVectorField<Complex>& f,
                                        const std::vector<double>& epsilons)
{
    FlowTangency out;
    out.epsilons = epsilons;
    const Complex x0 = f.base;
    const RationalFunction R1 = R.derivative();
    out.linearized_residual =
        std::abs(f.values.at(3) + 2.0 * eval_c(R, x0) * f.values[1] + eval_c(R1, x0) * f.values[0]);
    const DiffExpr res = kummer_residual(R);
    for (double e : epsilons)
        out.residuals.push_back(std::abs(evaluate(res, jet_env(flow_jet(f, e)))));
    double mx = 0.0;
    for (double r : out.residuals)
        mx = std::max(mx, r);
    out.exact_symmetry = mx < 1e-12;
    // least-squares slope of log r against log eps
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(epsilons.size());
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        double lx = std::log(epsilons[i]), ly = std::log(std::max(out.residuals[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

// ---------------------------------------------------------------------------
// Planes in the symmetric-power solution space meet the cone of squares

template <class S>
struct ConeWitness {
    S s, t;       // plane coordinates of the square
    S a, b, c;    // a psi1^2 + b psi1 psi2 + c psi2^2 with b^2 = 4ac
    S alpha, beta; // the square root up to scale: alpha psi1 + beta psi2
    Series<S> root;  // series of sqrt(W / leading factor), a solution of psi'' + R/2 psi = 0
    double square_residual = 0.0; // W - k (alpha psi1 + beta psi2)^2 through the order
    // root plugged into psi'' + R/2 psi; in floating point the square root
    // amplifies rounding by about |beta/alpha| per order
    double linear_residual = 0.0;
};

template <class S>
struct ConePlane {
    std::array<S, 3> quadratic; // A s^2 + B s t + C t^2 = b^2 - 4ac on the plane
    S discriminant;
    std::vector<ConeWitness<S>> witnesses;
};

namespace detail {

template <class S>
double magnitude(const S& v)
{
    if constexpr (std::is_same_v<S, Complex>)
        return std::abs(v);
    else if constexpr (std::is_same_v<S, Algebraic>)
        return std::abs(v.to_complex());
    else
        return std::abs(v.get_d());
}

template <class S>
bool negligible(const S& v)
{
    if constexpr (is_exact_v<S>)
        return kummer::is_zero(v);
    else
        return std::abs(v) < 1e-13;
}

template <class S>
double max_magnitude(const Series<S>& s)
{
    double m = 0.0;
    for (const auto& c : s.coeffs())
        m = std::max(m, magnitude(c));
    return m;
}

} // namespace detail

/// plane: two symmetric-power initial conditions (f, f', f'') at x0. The basis
/// psi1 = (1, 0), psi2 = (0, 1) at x0 gives psi1^2 = (1, 0, -R0), psi1 psi2 =
/// (0, 1, 0), psi2^2 = (0, 0, 2).
template <class S>
ConePlane<S> check_cone_plane(const RationalFunction& R, const S& x0, const std::array<std::array<S, 3>, 2>& plane,
                              std::size_t N = 12)
{
    const auto& F = plane[0];
    const auto& G = plane[1];
    if (detail::negligible(F[0] * G[1] - F[1] * G[0]) && detail::negligible(F[0] * G[2] - F[2] * G[0]) &&
        detail::negligible(F[1] * G[2] - F[2] * G[1]))
        fail(Errc::DegeneratePlane, "plane generators are linearly dependent");
    const S R0 = R.eval(x0);
    const S half = embed<S>(make_rational(1, 2)), two = S(2), four = S(4);
    auto abc = [&](const std::array<S, 3>& v) { return std::array<S, 3>{v[0], v[1], (v[2] + R0 * v[0]) * half}; };
    const auto f = abc(F), g = abc(G);
    ConePlane<S> out;
    const S A = f[1] * f[1] - four * f[0] * f[2];
    const S B = two * f[1] * g[1] - four * (f[0] * g[2] + g[0] * f[2]);
    const S C = g[1] * g[1] - four * g[0] * g[2];
    out.quadratic = {A, B, C};
    out.discriminant = B * B - four * A * C;

    std::vector<std::pair<S, S>> roots;
    if (!detail::negligible(A)) {
        S sq;
        if constexpr (std::is_same_v<S, Complex>)
            sq = std::sqrt(out.discriminant);
        else {
            auto r = field_sqrt(out.discriminant);
            if (!r)
                fail(Errc::UnsupportedField, "discriminant has no square root in the supported field");
            sq = *r;
        }
        roots.push_back({(S(0) - B + sq) / (two * A), S(1)});
        if (!detail::negligible(sq))
            roots.push_back({(S(0) - B - sq) / (two * A), S(1)});
    } else {
        roots.push_back({S(1), S(0)});
        if (!detail::negligible(B))
            roots.push_back({(S(0) - C) / B, S(1)});
    }

    const LinearODE lin = from_potential(R);
    const LinearODE sym = symmetric_power_2(lin);
    for (const auto& [s, t] : roots) {
        ConeWitness<S> w;
        w.s = s;
        w.t = t;
        w.a = s * f[0] + t * g[0];
        w.b = s * f[1] + t * g[1];
        w.c = s * f[2] + t * g[2];
        std::vector<S> init{s * F[0] + t * G[0], s * F[1] + t * G[1], s * F[2] + t * G[2]};
        Series<S> W = series_solve(sym, x0, init, N).coeffs;
        S k;
        if (!detail::negligible(w.a)) {
            w.alpha = S(1);
            w.beta = w.b / (two * w.a);
            k = w.a;
        } else {
            w.alpha = S(0);
            w.beta = S(1);
            k = w.c;
        }
        Series<S> psi = series_solve(lin, x0, std::vector<S>{w.alpha, w.beta}, N).coeffs;
        w.square_residual = detail::max_magnitude(W - psi * psi * k);
        Series<S> scaled = W * (S(1) / k);
        if (!detail::negligible(w.a)) {
            auto r = scaled.sqrt();
            if (!r)
                fail(Errc::UnsupportedField, "square root of the witness series");
            w.root = *r;
        } else {
            // scaled = t^2 (1 + ...): peel the double zero before the square root
            Series<S> shifted(N - 1, S(0));
            for (std::size_t i = 0; i + 2 <= N; ++i)
                shifted[i] = scaled[i + 2];
            auto r = shifted.sqrt();
            if (!r)
                fail(Errc::UnsupportedField, "square root of the witness series");
            w.root = Series<S>(N, S(0));
            for (std::size_t i = 0; i + 1 < N; ++i)
                w.root[i + 1] = (*r)[i];
        }
        w.linear_residual = detail::max_magnitude(apply_operator(lin, x0, w.root));
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

} // namespace kummer
