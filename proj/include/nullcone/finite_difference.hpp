#pragma once

// Central finite differences with one Richardson refinement. Each base stencil
// is second order with an error expansion in even powers of h, so combining
// steps h and h/2 as (4 D(h/2) - D(h)) / 3 leaves an O(h^4) error.

#include <algorithm>
#include <cmath>

#include "nullcone/error.hpp"
#include "nullcone/expr.hpp"

namespace nullcone {

inline constexpr double kDefaultFdStep = 1e-4;

/// Default step 1e-4 scaled by max(1, |t|).
inline double default_fd_step(double t) { return kDefaultFdStep * std::max(1.0, std::abs(t)); }

namespace detail {

template <class F, class S>
auto central_stencil(F& f, S t, int j, S h) {
    switch (j) {
    case 1: return (f(t + h) - f(t - h)) / (2 * h);
    case 2: return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
    case 3: return (f(t + 2 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2 * h)) / (2 * h * h * h);
    default:
        return (f(t + 2 * h) - 4.0 * f(t + h) + 6.0 * f(t) - 4.0 * f(t - h) + f(t - 2 * h)) / (h * h * h * h);
    }
}

} // namespace detail

/// j-th derivative of `f` at `t`, 1 <= j <= 4. `f` may return any type with
/// vector-space operations (double, Vec4, ...).
template <class F, class S = double>
auto central_derivative(F&& f, S t, int j, S h) {
    if (j < 1 || j > 4) throw InvalidConfig("finite-difference order must lie in [1, 4]");
    if (!(h > 0)) throw InvalidConfig("finite-difference step must be positive");
    const auto coarse = detail::central_stencil(f, t, j, h);
    const auto fine = detail::central_stencil(f, t, j, h / 2);
    return (S(4) * fine - coarse) / S(3);
}

/// Independent derivative oracle for expressions: never touches jet
/// arithmetic. Stencils run in long double, which keeps round-off well below
/// the truncation error for the steps used with fourth derivatives.
inline double fd_derivative(const Expr& e, double t, int j, double h) {
    auto f = [&](long double x) {
        try {
            return evaluate<long double>(e, x);
        } catch (const DomainError& err) {
            throw DomainError(std::string("stencil evaluation failed: ") + err.what(),
                              "t=" + format_double(static_cast<double>(x)));
        }
    };
    return static_cast<double>(central_derivative(f, static_cast<long double>(t), j, static_cast<long double>(h)));
}

inline double fd_derivative(const Expr& e, double t, int j) { return fd_derivative(e, t, j, default_fd_step(t)); }

} // namespace nullcone
