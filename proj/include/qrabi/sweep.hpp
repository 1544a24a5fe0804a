// sweep.hpp — (delta, g) grid sweeps, ridge extraction, and the quadratic fit
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qrabi/params.hpp"
#include "qrabi/photon_stats.hpp"
#include "qrabi/rootfind.hpp"
#include "qrabi/solver.hpp"

namespace qrabi {

struct SweepRange {
    double lo{0.0};
    double hi{0.0};
    int steps{2};

    double value(int i) const {
        return steps < 2 ? lo : lo + (hi - lo) * i / (steps - 1);
    }
};

enum class SweepMethod { spectral, oracle };

inline const char* to_string(SweepMethod m) {
    return m == SweepMethod::spectral ? "spectral" : "oracle";
}

struct SweepRecord {
    double delta{0.0};
    double g{0.0};
    double lambda{0.0};
    Phase phase{Phase::normal};
    Parity parity{Parity::minus};
    double x_root{0.0};
    double energy{0.0};
    double residual{0.0};
    PhotonStatistics stats;
    int truncation_n{0};
    SweepMethod method{SweepMethod::spectral};
    std::string error;  // empty on success; failed points are kept, not dropped

    bool ok() const { return error.empty(); }
};

// Numeric column accessor shared by ridge extraction, CSV, and rendering.
double record_field(const SweepRecord& rec, std::string_view name);
const std::vector<std::string>& numeric_field_names();

// Row-major grid (delta outer, g inner); deterministic and independent of the
// worker count. workers <= 0 means hardware concurrency.
std::vector<SweepRecord> run_sweep(const SweepRange& delta_range, const SweepRange& g_range,
                                   SweepMethod method, const SolveOptions& opts = {},
                                   int workers = 0);

struct RidgePoint {
    double g{0.0};
    double delta_star{0.0};
};

struct RidgeExtraction {
    std::vector<RidgePoint> points;
    std::vector<double> excluded_g;  // columns whose maximum sat on the boundary
};

// Per g column: argmax of `quantity` over the delta grid, refined by a
// three-point quadratic interpolation around the discrete maximum.
RidgeExtraction extract_ridge(const std::vector<SweepRecord>& records,
                              std::string_view quantity = "r");

struct RidgeFit {
    std::vector<RidgePoint> points;
    std::array<double, 3> coeffs{};          // (c2, c1, c0) of delta* = c2 g^2 + c1 g + c0
    double rms_residual{0.0};
    std::array<double, 3> reference_curve{2.0, 0.0, 0.0};  // critical curve delta = 2 g^2
};

// Ordinary least squares on the monomial basis (g^2, g, 1).
RidgeFit fit_quadratic(const std::vector<RidgePoint>& points);

}  // namespace qrabi
