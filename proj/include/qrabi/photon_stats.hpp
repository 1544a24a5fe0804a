// photon_stats.hpp — laboratory-frame observable panel for a branch pair
#pragma once

#include "qrabi/branch.hpp"
#include "qrabi/fock.hpp"

namespace qrabi {

// Laboratory moments obtained by operator application in the working frame
// with the substitution a -> a_frame + alpha, alpha = frame_displacement.
struct LabMoments {
    double a{0.0};      // <a>
    double adag{0.0};   // <a^dag>, adjoint route
    double a2{0.0};     // <a^2>
    double adag2{0.0};  // <a^dag^2>, adjoint route
    double n{0.0};      // <a^dag a>
    double n2{0.0};     // <(a^dag a)^2> = ||n_lab psi||^2
};

LabMoments lab_moments(const FockVector& state);
LabMoments lab_moments(const BranchState& state);

struct PhotonStatistics {
    double mean_n{0.0};
    double var_n{0.0};
    double q_excess{0.0};  // var_n - mean_n; > 0 is super-Poissonian
    double mean_x{0.0};    // x = (a + a^dag)/sqrt(2)
    double mean_p{0.0};    // vanishes identically for real coefficients
    double dx{0.0};
    double dp{0.0};
    double product{0.0};   // dx * dp
    double r{0.0};         // -(1/2) ln(dp/dx); r > 0 means p squeezed
    double overlap{0.0};   // <plus|minus>
    double cov_xp{0.0};    // symmetrized covariance; identically 0 here
};

// Panel evaluated on the minus branch (n-moments and variances are identical
// on the plus branch; <x> flips sign); overlap couples the two branches.
PhotonStatistics photon_statistics(const BranchState& plus, const BranchState& minus);

// (Delta I)^2 = dx^2 cos^2 phi + dp^2 sin^2 phi for I = (a e^{-i phi} + a^dag e^{i phi})/sqrt(2).
// Valid only while cov_xp is negligible; throws CrossTermViolation otherwise.
double quadrature_variance(const PhotonStatistics& stats, double phi);

// Same variance by direct complex operator application; the in-module
// cross-check for the closed formula above.
double quadrature_variance_direct(const BranchState& state, double phi);

}  // namespace qrabi
