#include "lipedge/lip_algebra.hpp"

#include <string>

namespace lipedge {

void LipParams::validate() const {
    if (!(m_bound > 0.0) || !std::isfinite(m_bound)) {
        throw std::invalid_argument("LipParams: m_bound must be a positive finite real, got " +
                                    std::to_string(m_bound));
    }
    if (max_level < 1) {
        throw std::invalid_argument("LipParams: max_level must be >= 1, got " +
                                    std::to_string(max_level));
    }
}

namespace {

void check_level(double v, const LipParams& p, const char* what) {
    if (!(std::abs(v) < p.m_bound)) {
        throw std::domain_error(std::string(what) + ": level " + std::to_string(v) +
                                " is outside (-" + std::to_string(p.m_bound) + ", " +
                                std::to_string(p.m_bound) + ")");
    }
}

}  // namespace

LogLevel lip_add(LogLevel u, LogLevel v, const LipParams& p) {
    p.validate();
    check_level(u.value(), p, "lip_add");
    check_level(v.value(), p, "lip_add");
    return LogLevel(detail::add_raw(u.value(), v.value(), p.m_bound));
}

LogLevel lip_sub(LogLevel u, LogLevel v, const LipParams& p) {
    p.validate();
    check_level(u.value(), p, "lip_sub");
    check_level(v.value(), p, "lip_sub");
    return LogLevel(detail::sub_raw(u.value(), v.value(), p.m_bound));
}

LogLevel lip_neg(LogLevel u, const LipParams& p) {
    p.validate();
    check_level(u.value(), p, "lip_neg");
    return LogLevel(-u.value());
}

LogLevel lip_scalar_mul(double lambda, LogLevel u, const LipParams& p) {
    p.validate();
    check_level(u.value(), p, "lip_scalar_mul");
    return LogLevel(detail::scalar_mul_raw(lambda, u.value(), p.m_bound));
}

double phi(LogLevel x, const LipParams& p) {
    p.validate();
    check_level(x.value(), p, "phi");
    return detail::phi_raw(x.value(), p.m_bound);
}

LogLevel phi_inv(double x, const LipParams& p) {
    p.validate();
    return LogLevel(detail::phi_inv_raw(x, p.m_bound));
}

}  // namespace lipedge
