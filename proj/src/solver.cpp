#include "qrabi/solver.hpp"

#include <cmath>

namespace qrabi {

PointSolution solve_point(const RabiParams& params, const SolveOptions& opts) {
    PointSolution sol;
    sol.root = ground_solution(params, opts.root);
    sol.plus = build_branch_state(params, sol.root, Parity::plus, opts.branch);
    sol.minus = build_branch_state(params, sol.root, Parity::minus, opts.branch);
    sol.stats = photon_statistics(sol.plus, sol.minus);
    return sol;
}

ValidationReport validate_point(const RabiParams& params, const PointSolution& sol,
                                const SolveOptions& opts) {
    ValidationReport rep;
    rep.oracle = oracle_statistics(params, opts.oracle);
    rep.energy_delta = std::abs(sol.root.energy - rep.oracle.e0);

    Parity oracle_parity = rep.oracle.parity_expect < 0.0 ? Parity::minus : Parity::plus;
    rep.parity_ok = sol.root.parity == oracle_parity;

    const PhotonStatistics& a = sol.stats;
    const PhotonStatistics& b = rep.oracle.stats;
    rep.field_deltas = {
        {"mean_n", std::abs(a.mean_n - b.mean_n)},
        {"var_n", std::abs(a.var_n - b.var_n)},
        {"q_excess", std::abs(a.q_excess - b.q_excess)},
        {"mean_x", std::abs(a.mean_x - b.mean_x)},
        {"mean_p", std::abs(a.mean_p - b.mean_p)},
        {"dx", std::abs(a.dx - b.dx)},
        {"dp", std::abs(a.dp - b.dp)},
        {"product", std::abs(a.product - b.product)},
        {"r", std::abs(a.r - b.r)},
        {"overlap", std::abs(a.overlap - b.overlap)},
        {"cov_xp", std::abs(a.cov_xp - b.cov_xp)},
    };
    rep.max_field_delta = 0.0;
    for (const auto& [name, d] : rep.field_deltas)
        rep.max_field_delta = std::max(rep.max_field_delta, d);
    rep.within_tolerance = rep.parity_ok &&
                           rep.energy_delta < opts.validate_energy_tol &&
                           rep.max_field_delta < opts.validate_stats_tol;
    return rep;
}

}  // namespace qrabi
