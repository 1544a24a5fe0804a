// branch.cpp — branch-state synthesis in the displaced frame
#include "qrabi/branch.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qrabi/double_double.hpp"
#include "qrabi/recurrence.hpp"

namespace qrabi {

namespace {

// Forward recurrences at a numerically inexact root eventually excite the
// growing solution; the observed |raw_n| therefore decays, bottoms out, and
// reverses. Cutting at the observed minimum is the minimal-solution heuristic.
// Two traps guide the detection: the number distribution can be multi-lobed
// (valleys at a few percent of the peak) and can have isolated interference
// near-zeros, so the floor is tracked on a sliding-window maximum and only
// counts once it is below tail_tol of the peak, where no physical lobe lives.
struct TruncationScan {
    static constexpr int kWindow = 5;

    double tail_tol;
    double window[kWindow] = {};
    double peak{0.0};
    double floor{std::numeric_limits<double>::infinity()};
    int floor_idx{-1};
    int small_run{0};
    int cut{-1};  // index past which coefficients are dropped
    bool done{false};

    explicit TruncationScan(double tol) : tail_tol(tol) {}

    void feed(int n, double mag) {
        if (done) return;
        window[n % kWindow] = mag;
        if (mag > peak) {
            peak = mag;
            floor = std::numeric_limits<double>::infinity();
            floor_idx = -1;
        }

        small_run = (peak > 0.0 && mag < 1e-14 * peak) ? small_run + 1 : 0;
        if (small_run >= 4) {
            cut = n;
            done = true;
            return;
        }
        if (n + 1 < kWindow) return;
        double wmax = 0.0;
        for (double w : window) wmax = std::max(wmax, w);
        if (wmax < tail_tol * peak && wmax < floor) {
            floor = wmax;
            floor_idx = n;
        } else if (floor_idx >= 0 && wmax > 100.0 * floor) {
            cut = floor_idx;
            done = true;
        }
    }
};

BranchState closed_form_branch(const RabiParams& params, const SpectralRoot& root,
                               Parity branch) {
    BranchState b;
    b.branch = branch;
    b.source_root = root;
    b.vector.frame_displacement = params.g;
    b.raw_norm = 1.0;
    b.tail_norm = 0.0;

    if (root.kind == RootKind::decoupled_g0 || branch == Parity::minus) {
        // decoupled ground and the displaced-limit minus branch are both the
        // frame vacuum D(g)|0>
        b.vector.coeffs = Eigen::VectorXd::Ones(1);
        b.truncation_n = 1;
        return b;
    }
    // displaced-limit plus branch: coherent |-g> expanded in the +g frame,
    // c_n = e^{-2g^2} (-2g)^n / sqrt(n!)
    std::vector<double> c;
    double g2 = params.g * params.g;
    double cn = std::exp(-2.0 * g2);
    double peak = cn;
    for (int n = 0; n < 400; ++n) {
        c.push_back(cn);
        peak = std::max(peak, std::abs(cn));
        cn *= -2.0 * params.g / std::sqrt(static_cast<double>(n + 1));
        if (std::abs(cn) < 1e-22 * peak) break;
    }
    b.vector.coeffs = Eigen::Map<Eigen::VectorXd>(c.data(), static_cast<long>(c.size()));
    b.vector.coeffs.normalize();
    b.truncation_n = static_cast<int>(c.size());
    return b;
}

}  // namespace

BranchState build_branch_state(const RabiParams& params, const SpectralRoot& root,
                               Parity branch, const BranchOptions& opts) {
    params.validate();
    if (root.kind != RootKind::spectral) return closed_form_branch(params, root, branch);
    if (params.g == 0.0)
        throw ZeroCoupling("build_branch_state: spectral root with g = 0");

    const DoubleDouble x = DoubleDouble(root.x_root) + DoubleDouble(root.x_lo);
    const DoubleDouble delta(params.delta);
    const bool minus_branch = (branch == Parity::minus);
    // gluing sign of the two equivalent expansions; for minus-parity roots the
    // J-sum carries the opposite sign of the K-sum
    const double sigma = (root.parity == Parity::plus) ? 1.0 : -1.0;

    require_off_poles(x, opts.n_cap, kPoleGuard);

    std::vector<DoubleDouble> raw;
    raw.reserve(64);
    TruncationScan scan(opts.state_tail_tolerance);

    DoubleDouble sm2(0.0), sm1(1.0);  // sqrt(n!) K_n
    for (int n = 0; n <= opts.n_cap && !scan.done; ++n) {
        DoubleDouble skn;
        if (n == 0) {
            skn = sm1;
        } else {
            using std::sqrt;
            DoubleDouble rn = sqrt(DoubleDouble(static_cast<double>(n)));
            skn = recurrence_weight(params, x, n - 1) * sm1 / rn -
                  sm2 * sqrt(DoubleDouble(static_cast<double>(n - 1))) / rn;
            sm2 = sm1;
            sm1 = skn;
        }
        DoubleDouble value = minus_branch ? delta / (x - DoubleDouble(n)) * skn : skn;
        double mag = std::abs(to_double(value));
        if (!std::isfinite(mag))
            throw TailDivergence("build_branch_state: coefficient overflow at n = " +
                                 std::to_string(n));
        raw.push_back(value);
        scan.feed(n, mag);
    }

    if (!scan.done) {
        if (scan.floor_idx >= 0) {
            scan.cut = scan.floor_idx;
        } else {
            throw TailDivergence(
                "build_branch_state: raw coefficients never decayed below " +
                std::to_string(opts.state_tail_tolerance) +
                " of their peak before n_cap; root too inaccurate or precision "
                "exhausted");
        }
    }

    const int len = scan.cut + 1;
    BranchState b;
    b.branch = branch;
    b.source_root = root;
    b.truncation_n = len;
    b.vector.frame_displacement = params.g;
    b.vector.coeffs.resize(len);
    for (int n = 0; n < len; ++n) {
        double s = ((n % 2) == 0 ? 1.0 : -1.0) * (minus_branch ? sigma : 1.0);
        b.vector.coeffs[n] = s * to_double(raw[n]);
    }
    b.raw_norm = b.vector.coeffs.norm();
    if (!(b.raw_norm > 0.0))
        throw TailDivergence("build_branch_state: vanishing branch norm");
    b.vector.coeffs /= b.raw_norm;

    // estimate the discarded weight: geometric continuation of the decay at
    // the cut, or the observed floor when the sequence reversed there
    double last = std::abs(b.vector.coeffs[len - 1]);
    double prev = len > 1 ? std::abs(b.vector.coeffs[len - 2]) : 1.0;
    double ratio = prev > 0.0 ? std::min(last / prev, 0.9) : 0.0;
    b.tail_norm = std::max(last * ratio / (1.0 - ratio), scan.floor / b.raw_norm);
    if (!(b.tail_norm < opts.state_tail_tolerance))
        throw TailDivergence("build_branch_state: tail norm " +
                             std::to_string(b.tail_norm) + " exceeds tolerance");
    return b;
}

}  // namespace qrabi
