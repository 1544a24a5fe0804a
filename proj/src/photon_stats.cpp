// photon_stats.cpp — moment evaluation through ladder application
#include "qrabi/photon_stats.hpp"

#include <cmath>
#include <complex>

#include "qrabi/errors.hpp"

namespace qrabi {

namespace {

// u + v with zero padding to the longer length, same frame assumed
Eigen::VectorXd padded_sum(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    const auto n = std::max(u.size(), v.size());
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    out.head(u.size()) += u;
    out.head(v.size()) += v;
    return out;
}

double padded_dot(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    const auto n = std::min(u.size(), v.size());
    return u.head(n).dot(v.head(n));
}

}  // namespace

LabMoments lab_moments(const FockVector& state) {
    const double alpha = state.frame_displacement;
    const Eigen::VectorXd& c = state.coeffs;

    FockVector low = apply_lowering(state);
    FockVector lowlow = apply_lowering(low);
    FockVector raise = apply_raising(state);
    FockVector raiseraise = apply_raising(raise);

    LabMoments m;
    double a_f = padded_dot(c, low.coeffs);        // <a_frame>
    double adag_f = padded_dot(raise.coeffs, c);   // adjoint route, same value
    m.a = a_f + alpha;
    m.adag = adag_f + alpha;
    m.a2 = padded_dot(c, lowlow.coeffs) + 2.0 * alpha * a_f + alpha * alpha;
    m.adag2 = padded_dot(raiseraise.coeffs, c) + 2.0 * alpha * adag_f + alpha * alpha;

    // n_lab psi = (a^dag_f a_f + alpha a_f + alpha a^dag_f + alpha^2) psi
    Eigen::VectorXd w = apply_raising(low).coeffs;
    w = padded_sum(w, alpha * low.coeffs);
    w = padded_sum(w, alpha * raise.coeffs);
    w = padded_sum(w, alpha * alpha * c);
    m.n = padded_dot(c, w);
    m.n2 = w.squaredNorm();
    return m;
}

LabMoments lab_moments(const BranchState& state) { return lab_moments(state.vector); }

PhotonStatistics photon_statistics(const BranchState& plus, const BranchState& minus) {
    if (plus.source_root.x_root != minus.source_root.x_root ||
        plus.source_root.parity != minus.source_root.parity ||
        plus.source_root.kind != minus.source_root.kind)
        throw RootMismatch("photon_statistics: branches built from different roots");

    LabMoments m = lab_moments(minus);

    PhotonStatistics s;
    s.mean_n = m.n;
    s.var_n = m.n2 - m.n * m.n;
    s.q_excess = s.var_n - s.mean_n;
    s.mean_x = (m.a + m.adag) / std::sqrt(2.0);
    s.mean_p = (m.a - m.adag) / std::sqrt(2.0);
    double sym_a2 = 0.5 * (m.a2 + m.adag2);
    double dx2 = 0.5 * (2.0 * sym_a2 + 2.0 * m.n + 1.0) - s.mean_x * s.mean_x;
    double dp2 = 0.5 * (2.0 * m.n + 1.0 - 2.0 * sym_a2);
    s.dx = std::sqrt(dx2);
    s.dp = std::sqrt(dp2);
    s.product = s.dx * s.dp;
    s.r = -0.5 * std::log(s.dp / s.dx);
    s.overlap = inner(plus.vector, minus.vector);
    s.cov_xp = 0.5 * (m.a2 - m.adag2);  // residue of the two adjoint routes
    return s;
}

double quadrature_variance(const PhotonStatistics& stats, double phi) {
    if (std::abs(stats.cov_xp) > 1e-8)
        throw CrossTermViolation("quadrature_variance: cov(x,p) = " +
                                 std::to_string(stats.cov_xp));
    double c = std::cos(phi), s = std::sin(phi);
    return stats.dx * stats.dx * c * c + stats.dp * stats.dp * s * s;
}

double quadrature_variance_direct(const BranchState& state, double phi) {
    const double alpha = state.vector.frame_displacement;
    const Eigen::VectorXd& c = state.vector.coeffs;
    const std::complex<double> em(std::cos(phi), -std::sin(phi));
    const std::complex<double> ep = std::conj(em);

    Eigen::VectorXd a_lab = padded_sum(apply_lowering(state.vector).coeffs, alpha * c);
    Eigen::VectorXd adag_lab = padded_sum(apply_raising(state.vector).coeffs, alpha * c);

    const auto n = std::max(a_lab.size(), adag_lab.size());
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
    w.head(a_lab.size()) += em * a_lab;
    w.head(adag_lab.size()) += ep * adag_lab;
    w /= std::sqrt(2.0);

    const auto nc = std::min<Eigen::Index>(c.size(), n);
    std::complex<double> mean(0.0, 0.0);
    for (Eigen::Index i = 0; i < nc; ++i) mean += c[i] * w[i];
    double mean_i = mean.real();
    double i2 = w.squaredNorm();
    return i2 - mean_i * mean_i;
}

}  // namespace qrabi
