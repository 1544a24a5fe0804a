// double_double.hpp — unevaluated double-double scalar (~31 significant digits)
//
// Error-free transforms follow Dekker and Bailey (QD library conventions).
// Used for the extended-precision recurrence path: re-validating coefficient
// tables and synthesizing branch coefficients at a polished root, where plain
// doubles bottom out near 1e-8 of the peak coefficient.
#pragma once

#include <cmath>
#include <limits>

#include <Eigen/Core>

namespace qrabi {

struct DoubleDouble {
    double hi{0.0};
    double lo{0.0};

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h) {}
    constexpr DoubleDouble(int v) : hi(v) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}
};

inline double to_double(const DoubleDouble& a) { return a.hi; }
inline double to_double(double a) { return a; }

namespace detail {

inline DoubleDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| (or a == 0).
inline DoubleDouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

// full-accuracy addition; the cheaper variant loses the low component under
// cancellation, which is fatal when the spectral series sums to ~0 at a root
inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble s = detail::two_sum(a.hi, b.hi);
    DoubleDouble t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) {
    return a + (-b);
}

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble p = detail::two_prod(a.hi, b.hi);
    return detail::quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
    double q1 = a.hi / b.hi;
    DoubleDouble r = a - DoubleDouble(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - DoubleDouble(q2) * b;
    double q3 = r.hi / b.hi;
    DoubleDouble q = detail::quick_two_sum(q1, q2);
    return detail::quick_two_sum(q.hi, q.lo + q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, const DoubleDouble& b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, const DoubleDouble& b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, const DoubleDouble& b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, const DoubleDouble& b) { return a = a / b; }

inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi == b.hi && a.lo == b.lo;
}
inline bool operator!=(const DoubleDouble& a, const DoubleDouble& b) { return !(a == b); }
inline bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DoubleDouble& a, const DoubleDouble& b) { return b < a; }
inline bool operator<=(const DoubleDouble& a, const DoubleDouble& b) { return !(b < a); }
inline bool operator>=(const DoubleDouble& a, const DoubleDouble& b) { return !(a < b); }

inline DoubleDouble abs(const DoubleDouble& a) {
    return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a;
}

inline DoubleDouble sqrt(const DoubleDouble& a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    // one Newton step on top of the double estimate doubles the digits
    double x0 = std::sqrt(a.hi);
    DoubleDouble x(x0);
    return x + (a - x * x) / (DoubleDouble(2.0) * x);
}

inline bool isfinite(const DoubleDouble& a) { return std::isfinite(a.hi); }

}  // namespace qrabi

namespace Eigen {

template <>
struct NumTraits<qrabi::DoubleDouble> : GenericNumTraits<qrabi::DoubleDouble> {
    typedef qrabi::DoubleDouble Real;
    typedef qrabi::DoubleDouble NonInteger;
    typedef qrabi::DoubleDouble Nested;
    typedef double Literal;

    static inline Real epsilon() { return {4.93e-32, 0.0}; }
    static inline Real dummy_precision() { return {1e-28, 0.0}; }
    static inline Real highest() { return {std::numeric_limits<double>::max(), 0.0}; }
    static inline Real lowest() { return {-std::numeric_limits<double>::max(), 0.0}; }
    static inline int digits10() { return 31; }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 12
    };
};

}  // namespace Eigen
