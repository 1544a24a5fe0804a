// config.hpp — run configuration: tolerances, caps, windows, output
#pragma once

#include <string>

#include "qrabi/solver.hpp"
#include "qrabi/sweep.hpp"

namespace qrabi {

struct RunConfig {
    // tolerances
    double root_tolerance{1e-12};
    double series_tolerance{1e-14};
    double state_tail_tolerance{1e-10};
    double convergence_target{1e-9};
    // caps
    int n_cap{400};
    int oracle_n_max_cap{4096};
    // sweep windows
    SweepRange delta_range{0.1, 1.0, 32};
    SweepRange g_range{0.1, 1.0, 32};
    // execution and output
    int workers{0};  // 0 = hardware concurrency
    std::string output;
    std::string format{"csv"};  // csv | json | svg

    void validate() const;
    SolveOptions solve_options() const;
};

// Flat key=value text; '#' starts a comment. Unknown keys are rejected.
RunConfig load_config(const std::string& path, RunConfig base = {});
RunConfig parse_config(const std::string& text, RunConfig base = {});

}  // namespace qrabi
