// recurrence.cpp — backward (Miller) evaluation of the minimal solution
#include "qrabi/recurrence.hpp"

#include <cmath>
#include <vector>

namespace qrabi {

namespace {

// One backward pass from start index n_start; fills out[0..length) with the
// un-normalized minimal solution. Values grow toward n = 0, so carriers and
// already-stored entries are rescaled on overflow risk.
void backward_pass(const RabiParams& p, double x, int length, int n_start,
                   std::vector<double>& out) {
    out.assign(length, 0.0);
    double above = 0.0;   // s_{n}
    double here = 1.0;    // s_{n-1}
    if (n_start - 1 < length) out[n_start - 1] = here;
    for (int n = n_start; n >= 2; --n) {
        // s_{n-2} = (f_{n-1} s_{n-1} / sqrt(n) - s_n) sqrt(n/(n-1))
        double below = (recurrence_weight(p, x, n - 1) * here / std::sqrt(n) - above) *
                       std::sqrt(static_cast<double>(n) / (n - 1));
        above = here;
        here = below;
        if (n - 2 < length) out[n - 2] = here;
        if (std::abs(here) > 1e260) {
            here *= 1e-260;
            above *= 1e-260;
            for (double& v : out) v *= 1e-260;  // far tail underflows harmlessly
        }
    }
}

}  // namespace

ScaledCoefficients<double> minimal_scaled_coefficients(const RabiParams& p, double x,
                                                       int length, double pole_guard) {
    p.validate();
    if (p.g == 0.0) throw ZeroCoupling("minimal_scaled_coefficients: g = 0");
    if (length < 1)
        throw std::invalid_argument("minimal_scaled_coefficients: length < 1");
    require_off_poles(x, length - 1, pole_guard);

    // backward recursion contracts the dominant solution only for n > 4g^2
    int n_start = std::max(length + 1, static_cast<int>(4.0 * p.g * p.g) + 2) + 48;
    std::vector<double> a, b;
    backward_pass(p, x, length, n_start, a);
    for (int round = 0; round < 12; ++round) {
        int wider = n_start + std::max(24, n_start / 3);
        backward_pass(p, x, length, wider, b);
        double worst = 0.0;
        double scale_a = 0.0, scale_b = 0.0;
        for (int n = 0; n < length; ++n) {
            scale_a = std::max(scale_a, std::abs(a[n]));
            scale_b = std::max(scale_b, std::abs(b[n]));
        }
        for (int n = 0; n < length; ++n) {
            double va = a[n] / scale_a, vb = b[n] / scale_b;
            if (std::abs(va) < 1e-250 && std::abs(vb) < 1e-250) continue;
            worst = std::max(worst, std::abs(va - vb) /
                                        std::max({std::abs(va), std::abs(vb), 1e-16}));
        }
        n_start = wider;
        a.swap(b);
        if (worst < 1e-12) break;
    }

    if (a[0] == 0.0)
        throw ConvergenceFailure("minimal_scaled_coefficients: vanishing K_0");
    ScaledCoefficients<double> s;
    s.sk.resize(length);
    s.sj.resize(length);
    for (int n = 0; n < length; ++n) {
        s.sk[n] = a[n] / a[0];
        s.sj[n] = p.delta / (x - n) * s.sk[n];
    }
    return s;
}

}  // namespace qrabi
