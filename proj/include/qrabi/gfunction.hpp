// gfunction.hpp — spectral function G_+-(x) whose zeros are the renormalized eigenvalues
//
// G_+-(x) = sum_n [K_n(x) -+ J_n(x)] g^n.  Evaluated through the rescaled terms
// t_n = K_n g^n (t_n = g f_{n-1} t_{n-1}/n - g^2 t_{n-2}/n), which converge at
// an x-independent geometric rate ~ 1/2 away from the zeros and keep the
// running magnitudes bounded for the swept parameter ranges.
#pragma once

#include <cmath>

#include "qrabi/errors.hpp"
#include "qrabi/params.hpp"
#include "qrabi/recurrence.hpp"

namespace qrabi {

struct GSeriesOptions {
    double series_tolerance{1e-14};  // relative to the running max term
    int tail_run{4};                 // consecutive small terms required
    int n_cap{400};
    double pole_guard{kPoleGuard};
};

template <typename Scalar>
struct GEvaluation {
    Scalar value{};
    int n_used{0};
    double tail_estimate{0.0};  // |last retained term|
    double max_term{0.0};       // running max |term|, the residual scale
};

template <typename Scalar = double>
GEvaluation<Scalar> g_series(const RabiParams& p, const Scalar& x, Parity parity,
                             const GSeriesOptions& opts = {}) {
    p.validate();
    if (p.g == 0.0)
        throw ZeroCoupling("g_series: f_n undefined at g = 0");
    require_off_poles(x, opts.n_cap, opts.pole_guard);

    const Scalar sign(parity == Parity::plus ? 1.0 : -1.0);
    const Scalar g(p.g);
    const Scalar g2 = g * g;
    const Scalar delta(p.delta);

    GEvaluation<Scalar> out;
    Scalar sum(0.0);
    Scalar tm2(0.0), tm1(1.0);  // K_{n} g^n terms
    double max_abs = 0.0;
    int small_run = 0;

    for (int n = 0; n <= opts.n_cap; ++n) {
        Scalar tn;
        if (n == 0) {
            tn = tm1;
        } else {
            tn = (g * recurrence_weight(p, x, n - 1) * tm1 - g2 * tm2) / Scalar(n);
            tm2 = tm1;
            tm1 = tn;
        }
        Scalar un = delta / (x - Scalar(n)) * tn;  // J_n g^n
        Scalar term = tn - sign * un;
        double mag = std::abs(to_double(term));
        if (!std::isfinite(mag))
            throw SeriesNoConverge("g_series: term overflow at n = " + std::to_string(n));
        sum += term;
        max_abs = std::max(max_abs, mag);
        out.n_used = n;
        out.tail_estimate = mag;

        small_run = (mag < opts.series_tolerance * max_abs) ? small_run + 1 : 0;
        if (small_run >= opts.tail_run) {
            out.value = sum;
            out.max_term = max_abs;
            return out;
        }
    }
    throw SeriesNoConverge("g_series: cap " + std::to_string(opts.n_cap) +
                           " reached before tail criterion");
}

inline double g_function(const RabiParams& p, double x, Parity parity,
                         const GSeriesOptions& opts = {}) {
    return g_series<double>(p, x, parity, opts).value;
}

}  // namespace qrabi
