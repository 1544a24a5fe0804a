// oracle.cpp — truncated-basis diagonalization and projected statistics
#include "qrabi/oracle.hpp"

#include <cmath>
#include <string>

#include "qrabi/errors.hpp"

namespace qrabi {

namespace {

// diag(Pi) in the interleaved basis: (-1)^n * (up: +1, down: -1)
double parity_sign(int index) {
    int n = index / 2;
    int up = index % 2;
    return ((n % 2 == 0) ? 1.0 : -1.0) * (up ? 1.0 : -1.0);
}

// Projects onto the dominant parity sector. Pi commutes with H, so the exact
// ground vector has definite parity; at quasi-degenerate points the solver
// returns an arbitrary doublet mixture and this makes the result deterministic
// (ties go to odd parity, the generic ground sector).
void purify_parity(Eigen::VectorXd& v) {
    const auto dim = v.size();
    Eigen::VectorXd odd(dim), even(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        double pv = parity_sign(static_cast<int>(i)) * v[i];
        odd[i] = 0.5 * (v[i] - pv);
        even[i] = 0.5 * (v[i] + pv);
    }
    double no = odd.norm(), ne = even.norm();
    v = (no >= ne) ? odd / no : even / ne;
}

struct ProjectedStats {
    double mean_n, var_n, mean_x, a2;
};

// Explicit quadratic forms in the undisplaced number basis.
ProjectedStats number_basis_stats(const Eigen::VectorXd& p) {
    const auto len = p.size();
    double mean_n = 0.0, n2 = 0.0, a = 0.0, a2 = 0.0;
    for (Eigen::Index n = 0; n < len; ++n) {
        double w = p[n] * p[n];
        mean_n += static_cast<double>(n) * w;
        n2 += static_cast<double>(n) * static_cast<double>(n) * w;
    }
    for (Eigen::Index n = 0; n + 1 < len; ++n)
        a += std::sqrt(static_cast<double>(n + 1)) * p[n + 1] * p[n];
    for (Eigen::Index n = 0; n + 2 < len; ++n)
        a2 += std::sqrt(static_cast<double>((n + 1) * (n + 2))) * p[n + 2] * p[n];
    return {mean_n, n2 - mean_n * mean_n, std::sqrt(2.0) * a, a2};
}

PhotonStatistics projected_statistics(const Eigen::VectorXd& v, double parity_expect) {
    const auto pairs = v.size() / 2;
    Eigen::VectorXd plus(pairs), minus(pairs);
    for (Eigen::Index n = 0; n < pairs; ++n) {
        double down = v[2 * n], up = v[2 * n + 1];
        plus[n] = (up + down) / std::sqrt(2.0);
        minus[n] = (up - down) / std::sqrt(2.0);
    }
    double np = plus.norm(), nm = minus.norm();
    double sigma = parity_expect < 0.0 ? -1.0 : 1.0;
    double overlap = sigma * plus.dot(minus) / (np * nm);
    plus /= np;
    minus /= nm;

    ProjectedStats m = number_basis_stats(minus);
    PhotonStatistics s;
    s.mean_n = m.mean_n;
    s.var_n = m.var_n;
    s.q_excess = m.var_n - m.mean_n;
    s.mean_x = m.mean_x;
    s.mean_p = 0.0;
    double dx2 = 0.5 * (2.0 * m.a2 + 2.0 * m.mean_n + 1.0) - m.mean_x * m.mean_x;
    double dp2 = 0.5 * (2.0 * m.mean_n + 1.0 - 2.0 * m.a2);
    s.dx = std::sqrt(dx2);
    s.dp = std::sqrt(dp2);
    s.product = s.dx * s.dp;
    s.r = -0.5 * std::log(s.dp / s.dx);
    s.overlap = overlap;
    s.cov_xp = 0.0;
    return s;
}

}  // namespace

TruncatedHamiltonian build_hamiltonian(const RabiParams& params, int n_max) {
    params.validate();
    if (n_max < 1) throw std::invalid_argument("build_hamiltonian: n_max < 1");

    TruncatedHamiltonian h;
    h.n_max = n_max;
    h.dim = 2 * (n_max + 1);
    h.entries = Eigen::MatrixXd::Zero(h.dim, h.dim);
    for (int n = 0; n <= n_max; ++n) {
        h.entries(2 * n, 2 * n) = n * params.omega - params.delta;      // (n, down)
        h.entries(2 * n + 1, 2 * n + 1) = n * params.omega + params.delta;  // (n, up)
    }
    for (int n = 0; n < n_max; ++n) {
        double c = params.g * std::sqrt(static_cast<double>(n + 1));
        // sigma_x flips the spin while a^dag + a shifts n by one
        h.entries(2 * (n + 1), 2 * n + 1) = c;
        h.entries(2 * n + 1, 2 * (n + 1)) = c;
        h.entries(2 * (n + 1) + 1, 2 * n) = c;
        h.entries(2 * n, 2 * (n + 1) + 1) = c;
    }
    return h;
}

std::pair<double, Eigen::VectorXd> lowest_eigenpair(const TruncatedHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("lowest_eigenpair: eigensolver failed on dim " +
                                 std::to_string(h.dim));
    double e0 = solver.eigenvalues()[0];
    Eigen::VectorXd v = solver.eigenvectors().col(0);

    double scale = h.entries.cwiseAbs().maxCoeff();
    double residual = (h.entries * v - e0 * v).norm();
    if (residual > 1e-9 * std::max(scale, 1.0) * std::sqrt(static_cast<double>(h.dim)))
        throw ConvergenceFailure("lowest_eigenpair: residual " + std::to_string(residual) +
                                 " above bound at dim " + std::to_string(h.dim));
    return {e0, v};
}

OracleResult oracle_statistics(const RabiParams& params, const OracleOptions& opts) {
    params.validate();

    double prev_e0 = 0.0, prev_mean = 0.0;
    bool have_prev = false;
    int n_max = opts.n_start;
    while (true) {
        auto [e0, v] = lowest_eigenpair(build_hamiltonian(params, n_max));
        double pexp = 0.0;
        for (Eigen::Index i = 0; i < v.size(); ++i)
            pexp += parity_sign(static_cast<int>(i)) * v[i] * v[i];
        if (std::abs(pexp) < 1.0 - 1e-8) {
            purify_parity(v);
            pexp = 0.0;
            for (Eigen::Index i = 0; i < v.size(); ++i)
                pexp += parity_sign(static_cast<int>(i)) * v[i] * v[i];
        }
        PhotonStatistics stats = projected_statistics(v, pexp);

        if (have_prev && std::abs(e0 - prev_e0) < opts.e0_target &&
            std::abs(stats.mean_n - prev_mean) <
                opts.mean_n_rel_target * std::max(std::abs(stats.mean_n), 1e-3)) {
            OracleResult out;
            out.e0 = e0;
            out.vector = std::move(v);
            out.parity_expect = pexp;
            out.stats = stats;
            out.n_max_used = n_max;
            return out;
        }
        prev_e0 = e0;
        prev_mean = stats.mean_n;
        have_prev = true;

        if (n_max >= opts.n_hard_cap)
            throw ConvergenceFailure("oracle_statistics: n_max cap " +
                                     std::to_string(opts.n_hard_cap) +
                                     " reached without stabilization");
        n_max = std::min(opts.n_hard_cap,
                         static_cast<int>(std::ceil(n_max * opts.growth)));
    }
}

}  // namespace qrabi
