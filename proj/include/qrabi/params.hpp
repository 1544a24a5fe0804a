// params.hpp — model parameters and core labels
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrabi {

// H = delta*sigma_z + omega*a^dag a + g*sigma_x (a^dag + a).
// Stored in normalized form: omega == 1, delta and g pre-divided by omega.
struct RabiParams {
    double delta{1.0};  // level-splitting half-gap, units of omega
    double g{1.0};      // qubit-mode coupling, units of omega
    double omega{1.0};  // mode frequency (reference scale)

    static RabiParams normalized(double delta, double g, double omega = 1.0) {
        if (!(omega > 0.0))
            throw std::invalid_argument("RabiParams: omega must be positive");
        RabiParams p{delta / omega, g / omega, 1.0};
        p.validate();
        return p;
    }

    void validate() const {
        if (!(delta > 0.0))
            throw std::invalid_argument("RabiParams: delta must be positive");
        if (!(g >= 0.0))
            throw std::invalid_argument("RabiParams: g must be nonnegative");
        if (!(omega > 0.0))
            throw std::invalid_argument("RabiParams: omega must be positive");
    }
};

// Parity sector label; names the spectral function G_+ / G_- and the
// spin projection (|up> +- |down>)/sqrt(2) of the matching branch state.
enum class Parity { plus, minus };

inline const char* to_string(Parity p) {
    return p == Parity::plus ? "plus" : "minus";
}

// Dimensionless coupling lambda = g*sqrt(2/(omega*delta)); lambda = 1 is the
// normal/superradiant boundary in the delta/omega -> infinity limit.
inline double lambda_coupling(const RabiParams& p) {
    return p.g * std::sqrt(2.0 / (p.omega * p.delta));
}

enum class Phase { normal, superradiant };

inline Phase classify_phase(const RabiParams& p) {
    return lambda_coupling(p) < 1.0 ? Phase::normal : Phase::superradiant;
}

inline const char* to_string(Phase ph) {
    return ph == Phase::normal ? "normal" : "superradiant";
}

}  // namespace qrabi
