#include "qrabi/fock.hpp"

#include <cmath>

namespace qrabi {

FockVector apply_lowering(const FockVector& v) {
    FockVector out;
    out.frame_displacement = v.frame_displacement;
    int n = v.size();
    out.coeffs.resize(std::max(n - 1, 0));
    for (int i = 0; i + 1 < n; ++i)
        out.coeffs[i] = std::sqrt(static_cast<double>(i + 1)) * v.coeffs[i + 1];
    return out;
}

FockVector apply_raising(const FockVector& v) {
    FockVector out;
    out.frame_displacement = v.frame_displacement;
    int n = v.size();
    out.coeffs = Eigen::VectorXd::Zero(n + 1);
    for (int i = 0; i < n; ++i)
        out.coeffs[i + 1] = std::sqrt(static_cast<double>(i + 1)) * v.coeffs[i];
    return out;
}

double inner(const FockVector& u, const FockVector& v) {
    if (u.frame_displacement != v.frame_displacement)
        throw FrameMismatch("inner: frames " + std::to_string(u.frame_displacement) +
                            " and " + std::to_string(v.frame_displacement) + " differ");
    int n = std::min(u.size(), v.size());
    return u.coeffs.head(n).dot(v.coeffs.head(n));
}

FockVector normalized(FockVector v) {
    double norm = v.coeffs.norm();
    if (norm > 0.0) v.coeffs /= norm;
    return v;
}

}  // namespace qrabi
