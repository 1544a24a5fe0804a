// oracle.hpp — brute-force cross-check by truncated Fock x spin diagonalization
//
// Everything here is deliberately independent of the spectral path: states come
// from a dense symmetric eigensolve and the observable panel is evaluated with
// explicit quadratic forms in the undisplaced number basis.
#pragma once

#include <utility>

#include <Eigen/Dense>

#include "qrabi/params.hpp"
#include "qrabi/photon_stats.hpp"

namespace qrabi {

// Basis ordering is (n, down), (n, up) interleaved: index 2n + s with s = 0
// for |down>, 1 for |up>.
struct TruncatedHamiltonian {
    int n_max{0};
    int dim{0};  // 2 (n_max + 1)
    Eigen::MatrixXd entries;
};

// <n,s|H|n,s> = n + s*delta (s = -1, +1); <n+1,s|H|n,-s> = g sqrt(n+1).
TruncatedHamiltonian build_hamiltonian(const RabiParams& params, int n_max);

// Lowest eigenpair of a real symmetric matrix; unit-norm vector, residual
// ||Hv - e0 v|| below 1e-9 of the matrix scale.
std::pair<double, Eigen::VectorXd> lowest_eigenpair(const TruncatedHamiltonian& h);

struct OracleOptions {
    double e0_target{1e-9};         // absolute stabilization of e0
    double mean_n_rel_target{1e-8}; // relative stabilization of <n>
    int n_start{32};
    double growth{1.5};
    int n_hard_cap{4096};
};

struct OracleResult {
    double e0{0.0};
    Eigen::VectorXd vector;     // ground eigenvector, basis as above
    double parity_expect{0.0};  // <Pi>, Pi = exp(i pi a^dag a) sigma_z
    PhotonStatistics stats;     // from spin-projected, renormalized components
    int n_max_used{0};
};

OracleResult oracle_statistics(const RabiParams& params, const OracleOptions& opts = {});

inline OracleResult oracle_statistics(const RabiParams& params, double convergence_target) {
    OracleOptions opts;
    opts.e0_target = convergence_target;
    return oracle_statistics(params, opts);
}

}  // namespace qrabi
