// branch.hpp — photonic branch states of the ground eigenstate
//
// The eigenstate splits into a cat-like pair: |psi> = |plus> x |+> + |minus> x |->
// with |+-> = (|up> +- |down>)/sqrt(2). Both photonic branches are expanded in
// the single working frame D(+g)|n>:
//   plus  branch  ~ (-1)^n sqrt(n!) K_n(x)
//   minus branch  ~ sigma (-1)^n sqrt(n!) J_n(x)
// where sigma (+1 for plus-parity roots, -1 for minus) is the gluing sign of
// the two equivalent expansions; carrying it on the minus branch makes the
// branch overlap positive for the ground state.
#pragma once

#include "qrabi/fock.hpp"
#include "qrabi/params.hpp"
#include "qrabi/rootfind.hpp"

namespace qrabi {

struct BranchOptions {
    double state_tail_tolerance{1e-10};
    int n_cap{400};
};

struct BranchState {
    FockVector vector;        // unit norm, frame_displacement = +g
    Parity branch;            // spin projection label
    SpectralRoot source_root;
    int truncation_n{0};      // retained length
    double tail_norm{0.0};    // discarded-coefficient norm estimate, relative
    double raw_norm{0.0};     // pre-normalization branch weight (the plus/minus
                              // ratio fixes any future joint-state observable)
};

// Coefficients are synthesized in double-double arithmetic at the polished
// root; truncation happens at the global minimum of |raw_n| once decay has
// reversed, or after 4 consecutive terms below 1e-14 of the peak.
BranchState build_branch_state(const RabiParams& params, const SpectralRoot& root,
                               Parity branch, const BranchOptions& opts = {});

}  // namespace qrabi
