// rootfind.hpp — bracketing and refinement of spectral-function zeros
#pragma once

#include <utility>
#include <vector>

#include "qrabi/gfunction.hpp"
#include "qrabi/params.hpp"

namespace qrabi {

// How a root was obtained. The closed forms bypass the recurrence entirely:
// g = 0 decouples the qubit (ground |0> x |down>, E = -delta) and delta -> 0
// reduces to a displaced oscillator (E = -g^2 - delta e^{-2g^2}).
enum class RootKind { spectral, decoupled_g0, displaced_delta0 };

struct SpectralRoot {
    double x_root{0.0};   // zero of G_parity
    double x_lo{0.0};     // extended-precision remainder; x_root + x_lo is the
                          // polished root used for branch-state synthesis
    Parity parity{Parity::minus};
    int index_m{0};       // ordinal within the scanned window (0 = lowest)
    double energy{0.0};   // E = x_root - g^2
    double residual{0.0}; // |G(x)| / max series term at the polished root
    bool juddian_suspect{false};
    RootKind kind{RootKind::spectral};
};

struct RootOptions {
    double root_tolerance{1e-12};  // residual bound, relative to max series term
    double pole_guard{kPoleGuard};
    double g_min{1e-3};            // below: decoupled closed form
    double delta_min{1e-5};        // below: displaced closed form
    int scan_points{128};
    GSeriesOptions series{};
};

using Bracket = std::pair<double, double>;

// Scans [x_lo, x_hi] on a grid deflected off integer poles and returns every
// sign-change interval. A sign change across a pole is kept only when it is
// reconfirmed inside a pole-free subinterval.
std::vector<Bracket> bracket_roots(const RabiParams& params, Parity parity,
                                   double x_lo, double x_hi, int scan_points,
                                   const RootOptions& opts = {});

// Bisection with inverse-quadratic acceleration (steps leaving the bracket are
// rejected), then a double-double polish that fills in x_lo.
SpectralRoot refine_root(const RabiParams& params, Parity parity,
                         const Bracket& bracket, const RootOptions& opts = {});

// Minimum-energy root over both parities on x in [-delta-1, 0), or the
// matching closed form when g or delta is below its threshold.
SpectralRoot ground_solution(const RabiParams& params, const RootOptions& opts = {});

}  // namespace qrabi
