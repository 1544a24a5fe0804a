// rootfind.cpp — spectral root location between the poles of G
#include "qrabi/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "qrabi/double_double.hpp"

namespace qrabi {

namespace {

// Shifts a scan point off any nonnegative-integer pole.
double deflect(double x, double guard) {
    double nearest = std::round(x);
    if (nearest < 0.0 || std::abs(x - nearest) >= guard) return x;
    return x >= nearest ? nearest + guard : nearest - guard;
}

// First nonnegative-integer pole strictly inside (a, b), if any.
std::optional<double> pole_inside(double a, double b) {
    double first = std::ceil(std::min(a, b));
    if (first < 0.0) first = 0.0;
    if (first > std::min(a, b) && first < std::max(a, b)) return first;
    return std::nullopt;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

struct GProbe {
    const RabiParams& params;
    Parity parity;
    const GSeriesOptions& series;

    double operator()(double x) const {
        return g_series<double>(params, x, parity, series).value;
    }
};

// Splits (a, b) across its internal poles and keeps the sub-bracket(s) whose
// endpoints still straddle zero; a flip explained entirely by a pole dies here.
void confirm_bracket(const GProbe& g, double a, double fa, double b, double fb,
                     double guard, std::vector<Bracket>& out) {
    auto pole = pole_inside(a, b);
    if (!pole) {
        if (sign_of(fa) != sign_of(fb) && sign_of(fa) != 0) out.emplace_back(a, b);
        return;
    }
    double left = *pole - guard;
    double right = *pole + guard;
    if (left > a) {
        double fl = g(left);
        confirm_bracket(g, a, fa, left, fl, guard, out);
    }
    if (right < b) {
        double fr = g(right);
        confirm_bracket(g, right, fr, b, fb, guard, out);
    }
}

// Double-double bisection polish inside a sign-confirmed double bracket.
// Returns the polished root and its relative residual |G| / max term.
std::pair<DoubleDouble, double> polish_root(const RabiParams& params, Parity parity,
                                            double a, double b,
                                            const GSeriesOptions& series) {
    // the double tail criterion would cap the polish at double accuracy
    GSeriesOptions dd_series = series;
    dd_series.series_tolerance = 1e-30;
    dd_series.n_cap = std::max(series.n_cap, 2 * series.n_cap);

    DoubleDouble lo(std::min(a, b)), hi(std::max(a, b));
    auto eval = [&](const DoubleDouble& x) {
        return g_series<DoubleDouble>(params, x, parity, dd_series);
    };
    DoubleDouble flo = eval(lo).value;
    DoubleDouble fhi = eval(hi).value;
    DoubleDouble root = (lo + hi) * DoubleDouble(0.5);
    if ((flo.hi > 0.0) != (fhi.hi > 0.0)) {
        for (int it = 0; it < 120; ++it) {
            DoubleDouble mid = (lo + hi) * DoubleDouble(0.5);
            DoubleDouble fm = eval(mid).value;
            if ((fm.hi > 0.0) == (flo.hi > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
            if (to_double(hi - lo) < 1e-30 * (1.0 + std::abs(to_double(mid)))) break;
        }
        root = (lo + hi) * DoubleDouble(0.5);
    }
    auto fin = eval(root);
    double rel = std::abs(to_double(fin.value)) / std::max(fin.max_term, 1e-300);
    return {root, rel};
}

SpectralRoot decoupled_root(const RabiParams& params) {
    SpectralRoot r;
    r.kind = RootKind::decoupled_g0;
    r.parity = Parity::minus;  // ground |0> x |down> has Pi = -1
    r.energy = -params.delta;
    r.x_root = r.energy + params.g * params.g;
    r.x_lo = 0.0;
    r.residual = 0.0;
    return r;
}

SpectralRoot displaced_root(const RabiParams& params) {
    SpectralRoot r;
    r.kind = RootKind::displaced_delta0;
    r.parity = Parity::minus;
    double g2 = params.g * params.g;
    r.energy = -g2 - params.delta * std::exp(-2.0 * g2);  // first-order splitting
    r.x_root = r.energy + g2;
    r.x_lo = 0.0;
    r.residual = 0.0;
    return r;
}

}  // namespace

std::vector<Bracket> bracket_roots(const RabiParams& params, Parity parity,
                                   double x_lo, double x_hi, int scan_points,
                                   const RootOptions& opts) {
    params.validate();
    if (!(x_lo < x_hi) || scan_points < 2) return {};

    GProbe g{params, parity, opts.series};
    std::vector<Bracket> out;

    double step = (x_hi - x_lo) / (scan_points - 1);
    double prev_x = deflect(x_lo, opts.pole_guard);
    double prev_f = g(prev_x);
    for (int i = 1; i < scan_points; ++i) {
        double x = deflect(x_lo + i * step, opts.pole_guard);
        if (x <= prev_x) continue;
        double f = g(x);
        if (sign_of(prev_f) != sign_of(f) && sign_of(prev_f) != 0)
            confirm_bracket(g, prev_x, prev_f, x, f, opts.pole_guard, out);
        prev_x = x;
        prev_f = f;
    }
    return out;
}

SpectralRoot refine_root(const RabiParams& params, Parity parity,
                         const Bracket& bracket, const RootOptions& opts) {
    params.validate();
    GProbe g{params, parity, opts.series};

    double a = bracket.first, b = bracket.second;
    if (a > b) std::swap(a, b);
    double fa = g(a), fb = g(b);
    if (sign_of(fa) == sign_of(fb))
        throw BracketInvalid("refine_root: G has equal signs at " + std::to_string(a) +
                             " and " + std::to_string(b));

    // bisection with an inverse-quadratic candidate when three points are live
    double c = a, fc = fa;
    while (b - a > 1e-13 * (1.0 + std::abs(a) + std::abs(b))) {
        double mid = 0.5 * (a + b);
        double x = mid;
        if (fc != fa && fc != fb && fa != fb) {
            double q = fa / fc, r = fb / fc, s = fb / fa;
            double num = s * (r * (q - r) * (b - a) - (1.0 - r) * (b - c));
            double den = (q - 1.0) * (r - 1.0) * (s - 1.0);
            if (den != 0.0) {
                double cand = b + num / den;
                if (cand > a && cand < b) x = cand;
            }
        }
        // keep strictly inside so progress is guaranteed
        double margin = 1e-14 * (1.0 + std::abs(x));
        x = std::clamp(x, a + margin, b - margin);
        if (!(x > a && x < b)) x = mid;
        double fx = g(x);
        c = (sign_of(fx) == sign_of(fa)) ? a : b;
        fc = (c == a) ? fa : fb;
        if (sign_of(fx) == sign_of(fa)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }

    SpectralRoot root;
    root.parity = parity;
    auto [polished, residual] = polish_root(params, parity, a, b, opts.series);
    root.x_root = to_double(polished);
    root.x_lo = to_double(polished - DoubleDouble(root.x_root));
    root.residual = residual;
    root.energy = root.x_root - params.g * params.g;

    double nearest = std::round(root.x_root);
    root.juddian_suspect =
        nearest >= 0.0 && std::abs(root.x_root - nearest) < 1e-6;
    return root;
}

SpectralRoot ground_solution(const RabiParams& params, const RootOptions& opts) {
    params.validate();
    if (params.g <= opts.g_min) return decoupled_root(params);
    if (params.delta <= opts.delta_min) return displaced_root(params);

    auto lowest_root = [&](double window_lo, int scan_points) -> std::optional<SpectralRoot> {
        std::optional<SpectralRoot> best;
        for (Parity parity : {Parity::minus, Parity::plus}) {
            auto brackets =
                bracket_roots(params, parity, window_lo, -opts.pole_guard, scan_points, opts);
            if (brackets.empty()) continue;
            SpectralRoot r = refine_root(params, parity, brackets.front(), opts);
            r.index_m = 0;
            if (!best || r.energy < best->energy) best = r;
        }
        return best;
    };

    double window_lo = -params.delta - 1.0;
    if (auto r = lowest_root(window_lo, opts.scan_points)) return *r;
    // widen once: the variational bound E0 >= -delta - g^2 caps how far down
    double widened = -params.delta - std::max(2.0, params.g * params.g) - 1.0;
    if (auto r = lowest_root(widened, 4 * opts.scan_points)) return *r;
    throw NoRootFound("ground_solution: no bracket in [" + std::to_string(widened) +
                      ", 0) for delta = " + std::to_string(params.delta) +
                      ", g = " + std::to_string(params.g));
}

}  // namespace qrabi
