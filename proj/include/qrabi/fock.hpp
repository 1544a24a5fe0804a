// fock.hpp — real coefficient vectors over a displaced Fock frame
//
// A FockVector holds c_0..c_N over the basis D(alpha)|n>: the working frame is
// the displaced oscillator, and laboratory-frame operators act through the
// substitution a -> a_frame + alpha.
#pragma once

#include <Eigen/Core>

#include "qrabi/errors.hpp"

namespace qrabi {

struct FockVector {
    Eigen::VectorXd coeffs;
    double frame_displacement{0.0};

    int size() const { return static_cast<int>(coeffs.size()); }
};

// a|n> = sqrt(n)|n-1> in the working frame; length shrinks by one.
FockVector apply_lowering(const FockVector& v);

// a^dag|n> = sqrt(n+1)|n+1>; length grows by one.
FockVector apply_raising(const FockVector& v);

// sum u_n v_n over the common length, shorter vector zero-padded.
// Throws FrameMismatch when the displacements differ.
double inner(const FockVector& u, const FockVector& v);

FockVector normalized(FockVector v);

}  // namespace qrabi
