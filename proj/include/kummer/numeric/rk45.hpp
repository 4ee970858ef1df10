#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "kummer/algebra/field.hpp"
#include "kummer/error.hpp"

namespace kummer {

using State = std::vector<Complex>;

struct IntegratorOptions {
    double atol = 1e-10;
    double rtol = 1e-10;
    double initial_step = 1e-3;
    double min_step = 1e-14;
    std::size_t max_steps = 500000;
};

struct StepRecord {
    double s;
    State y;
    double error; // weighted local error estimate of the last accepted step
};

namespace detail {

struct DormandPrince {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // b - b*, the embedded fourth-order difference
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;
};

inline State axpy(const State& y, std::initializer_list<std::pair<double, const State*>> terms, double h)
{
    State out = y;
    for (auto [c, k] : terms)
        if (c != 0.0)
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] += h * c * (*k)[i];
    return out;
}

inline bool finite(const State& y)
{
    for (const auto& v : y)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return false;
    return true;
}

} // namespace detail

/// Dormand-Prince 5(4) with PI step control on a real parameter s. Steps are
/// clipped so that every entry of stops (sorted, inside (s0, s1]) is hit
/// exactly; one record is returned per stop.
template <class Rhs>
std::vector<StepRecord> dopri45(Rhs&& f, double s0, double s1, State y, const IntegratorOptions& opt,
                                const std::vector<double>& stops)
{
    using T = detail::DormandPrince;
    std::vector<StepRecord> out;
    double s = s0, h = std::min(opt.initial_step, s1 - s0);
    double err_prev = 1.0;
    std::size_t next = 0, steps = 0;
    while (next < stops.size() && stops[next] <= s0)
        ++next;
    State k1 = f(s, y);
    while (next < stops.size()) {
        if (++steps > opt.max_steps)
            fail(Errc::StepFailure, "step budget exhausted at s = " + std::to_string(s));
        const double target = stops[next];
        const double h_free = h;
        bool clipped = false;
        if (s + h >= target) {
            h = target - s;
            clipped = true;
        }
        State k2 = f(s + T::c2 * h, detail::axpy(y, {{T::a21, &k1}}, h));
        State k3 = f(s + T::c3 * h, detail::axpy(y, {{T::a31, &k1}, {T::a32, &k2}}, h));
        State k4 = f(s + T::c4 * h, detail::axpy(y, {{T::a41, &k1}, {T::a42, &k2}, {T::a43, &k3}}, h));
        State k5 = f(s + T::c5 * h, detail::axpy(y, {{T::a51, &k1}, {T::a52, &k2}, {T::a53, &k3}, {T::a54, &k4}}, h));
        State k6 = f(s + h, detail::axpy(y, {{T::a61, &k1}, {T::a62, &k2}, {T::a63, &k3}, {T::a64, &k4}, {T::a65, &k5}}, h));
        State yn = detail::axpy(y, {{T::b1, &k1}, {T::b3, &k3}, {T::b4, &k4}, {T::b5, &k5}, {T::b6, &k6}}, h);
        State k7 = f(s + h, yn);
        double err = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            Complex e = h * (T::e1 * k1[i] + T::e3 * k3[i] + T::e4 * k4[i] + T::e5 * k5[i] + T::e6 * k6[i] + T::e7 * k7[i]);
            double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(yn[i]));
            err += std::norm(e) / (sc * sc);
        }
        err = std::sqrt(err / static_cast<double>(y.size()));
        if (!std::isfinite(err) || !detail::finite(yn)) {
            h *= 0.25;
            if (h < opt.min_step)
                fail(Errc::StepFailure, "non-finite state at s = " + std::to_string(s));
            continue;
        }
        if (err <= 1.0) {
            s = clipped ? target : s + h;
            y = std::move(yn);
            k1 = std::move(k7);
            if (clipped) {
                out.push_back({s, y, err});
                ++next;
            }
            double fac = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.7 / 5) * std::pow(err_prev, 0.4 / 5);
            err_prev = std::max(err, 1e-4);
            h *= std::clamp(fac, 0.2, 5.0);
            if (clipped)
                h = std::max(h, h_free);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5));
            if (h < opt.min_step)
                fail(Errc::StepFailure, "step size underflow at s = " + std::to_string(s));
        }
    }
    return out;
}

} // namespace kummer
