#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kummer/algebra/field.hpp"

namespace kummer {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Row echelon data of A: pivot columns and the reduced matrix.
template <Field F>
struct Echelon {
    Matrix<F> rref;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;
};

template <Field F>
Echelon<F> row_reduce(Matrix<F> a, std::size_t cols)
{
    Echelon<F> e;
    e.cols = cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t best = row;
        double w = 0.0;
        for (std::size_t r = row; r < a.size(); ++r) {
            double pw = pivot_weight(a[r][col]);
            if (pw > w) {
                w = pw;
                best = r;
                if constexpr (is_exact_v<F>)
                    break;
            }
        }
        if (w == 0.0)
            continue;
        std::swap(a[row], a[best]);
        const F inv = F(1) / a[row][col];
        for (auto& v : a[row])
            v = v * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || is_zero(a[r][col]))
                continue;
            const F f = a[r][col];
            for (std::size_t k = col; k < a[r].size(); ++k)
                a[r][k] = a[r][k] - f * a[row][k];
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rref = std::move(a);
    return e;
}

/// Basis of {x : A x = 0}.
template <Field F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& a, std::size_t cols)
{
    auto e = row_reduce(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<F> v(cols, F(0));
        v[free] = F(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = F(0) - e.rref[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of A x = b (free variables set to zero), or nullopt.
template <Field F>
std::optional<std::vector<F>> solve_linear(Matrix<F> a, const std::vector<F>& b, std::size_t cols)
{
    for (std::size_t r = 0; r < a.size(); ++r) {
        a[r].resize(cols, F(0));
        a[r].push_back(b[r]);
    }
    auto e = row_reduce(std::move(a), cols + 1);
    std::vector<F> x(cols, F(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == cols)
            return std::nullopt;
        x[e.pivots[i]] = e.rref[i][cols];
    }
    return x;
}

} // namespace kummer
