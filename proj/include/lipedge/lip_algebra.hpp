#pragma once

#include <cmath>
#include <stdexcept>

namespace lipedge {

// Model constants. Logarithmic gray levels live in the open interval
// (-m_bound, m_bound); physical levels are integers in [0, max_level].
struct LipParams {
    double m_bound = 1.0;
    int max_level = 255;

    // Throws std::invalid_argument unless m_bound > 0 and max_level >= 1.
    void validate() const;
};

// A logarithmic gray level. The algebra keeps values strictly inside
// (-m_bound, m_bound); operations reject inputs outside that interval.
class LogLevel {
public:
    constexpr LogLevel() = default;
    explicit constexpr LogLevel(double v) : value_(v) {}

    constexpr double value() const { return value_; }

    friend constexpr bool operator==(LogLevel a, LogLevel b) { return a.value_ == b.value_; }

private:
    double value_ = 0.0;
};

namespace detail {

// Raw double-valued algebra shared by the checked front ends, the contrast
// pipeline and the scalar kernels. Callers guarantee |u|, |v| < m.

// A result that rounded onto +-m is pushed back into the open interval.
// The formulas below only land on the boundary when floating point rounds
// them there (or when tanh/pow saturate); the model's interval is open.
inline double clamp_open(double v, double m) {
    if (v >= m) return std::nextafter(m, 0.0);
    if (v <= -m) return -std::nextafter(m, 0.0);
    return v;
}

inline double add_raw(double u, double v, double m) {
    return clamp_open((u + v) / (1.0 + (u * v) / (m * m)), m);
}

inline double sub_raw(double u, double v, double m) {
    return clamp_open((u - v) / (1.0 - (u * v) / (m * m)), m);
}

inline double phi_raw(double x, double m) {
    // (m/2) ln((m+x)/(m-x)), evaluated through atanh for accuracy near 0
    return m * std::atanh(x / m);
}

inline double phi_inv_raw(double x, double m) {
    // m (e^{x/m} - e^{-x/m}) / (e^{x/m} + e^{-x/m}); tanh keeps it from
    // overflowing for large |x|
    return clamp_open(m * std::tanh(x / m), m);
}

inline double scalar_mul_raw(double lambda, double u, double m) {
    const double a = std::pow(m + u, lambda);
    const double b = std::pow(m - u, lambda);
    const double s = a + b;
    if (std::isfinite(s) && s > 0.0) {
        return clamp_open(m * (a - b) / s, m);
    }
    // a pow over- or underflowed (|lambda| far outside the moderate range);
    // transport through the isomorphism instead, which cannot overflow
    return phi_inv_raw(lambda * phi_raw(u, m), m);
}

}  // namespace detail

// Vector-space operations on logarithmic gray levels. Each throws
// std::domain_error if a level argument lies outside (-m_bound, m_bound).
LogLevel lip_add(LogLevel u, LogLevel v, const LipParams& p);
LogLevel lip_sub(LogLevel u, LogLevel v, const LipParams& p);
LogLevel lip_neg(LogLevel u, const LipParams& p);
LogLevel lip_scalar_mul(double lambda, LogLevel u, const LipParams& p);

// The isomorphism onto (R, +, *): phi(x) = (m/2) ln((m+x)/(m-x)).
// Strictly increasing and odd; throws std::domain_error if |x| >= m_bound.
double phi(LogLevel x, const LipParams& p);

// Inverse isomorphism; total over the reals, result strictly inside
// (-m_bound, m_bound) even where tanh saturates.
LogLevel phi_inv(double x, const LipParams& p);

}  // namespace lipedge
