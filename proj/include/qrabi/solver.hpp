// solver.hpp — single-point pipeline: root -> branches -> statistics
#pragma once

#include <string>
#include <vector>

#include "qrabi/branch.hpp"
#include "qrabi/oracle.hpp"
#include "qrabi/photon_stats.hpp"
#include "qrabi/rootfind.hpp"

namespace qrabi {

struct SolveOptions {
    RootOptions root{};
    BranchOptions branch{};
    OracleOptions oracle{};
    double validate_energy_tol{1e-7};
    double validate_stats_tol{1e-6};
};

struct PointSolution {
    SpectralRoot root;
    BranchState plus;
    BranchState minus;
    PhotonStatistics stats;
};

PointSolution solve_point(const RabiParams& params, const SolveOptions& opts = {});

// Per-field comparison against the diagonalization oracle.
struct ValidationReport {
    OracleResult oracle;
    double energy_delta{0.0};
    bool parity_ok{false};  // spectral parity label matches sign of <Pi>
    std::vector<std::pair<std::string, double>> field_deltas;
    double max_field_delta{0.0};
    bool within_tolerance{false};
};

ValidationReport validate_point(const RabiParams& params, const PointSolution& sol,
                                const SolveOptions& opts = {});

}  // namespace qrabi
