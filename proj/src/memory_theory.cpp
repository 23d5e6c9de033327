#include "longmem/memory_theory.hpp"

#include <cstdio>
#include <stdexcept>

namespace longmem {

namespace {

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

} // namespace

std::string MemoryClass::str() const {
    switch (label) {
        case Label::LongMemoryCov: return "long(cov)";
        case Label::ShortMemoryCov: return "short(cov)";
        case Label::BoundaryLong: return "boundary-long";
        case Label::LM: return "LM(" + format_short(d_tilde) + ")";
        case Label::LM0: return "LM(0)";
        case Label::OutOfScope: return "out-of-scope";
    }
    return "?";
}

MemoryClass classify_covariance(double beta, int k, bool L_const) {
    if (!(beta > 0.5 && beta < 1.0)) throw std::domain_error("classify_covariance: 1/2 < beta < 1");
    if (k < 1) throw std::domain_error("classify_covariance: k >= 1");
    double kc = k * (2.0 * beta - 1.0);
    if (kc < 1.0)
        return {MemoryClass::Label::LongMemoryCov, 0.0, "k(2b-1) < 1: covariance sums diverge"};
    if (kc > 1.0)
        return {MemoryClass::Label::ShortMemoryCov, 0.0, "k(2b-1) > 1: covariance sums converge absolutely"};
    if (L_const)
        return {MemoryClass::Label::LongMemoryCov, 0.0,
                "k(2b-1) = 1 with constant slowly varying part: logarithmic divergence"};
    return {MemoryClass::Label::BoundaryLong, 0.0,
            "k(2b-1) = 1: divergence depends on the slowly varying part"};
}

MemoryClass classify_spectral(double d, int k) {
    if (!(d > 0.0 && d < 0.5)) throw std::domain_error("classify_spectral: 0 < d < 1/2");
    if (k < 1) throw std::domain_error("classify_spectral: k >= 1");
    double g = 1.0 - 2.0 * d;
    if (k * g < 1.0) {
        double dt = (d - 0.5) * k + 0.5;
        return {MemoryClass::Label::LM, dt, "k(1-2d) < 1: pole exponent (d-1/2)k + 1/2 survives"};
    }
    if (k * g > 1.0 && (k - 1) * g < 1.0)
        return {MemoryClass::Label::LM0, 0.0,
                "k(1-2d) > 1, (k-1)(1-2d) < 1: spectrum slowly varying at zero"};
    return {MemoryClass::Label::OutOfScope, 0.0,
            "no claim for (k-1)(1-2d) >= 1 or the boundary k(1-2d) = 1"};
}

MemoryClass classify_square_antipersistent(double d) {
    if (!(d > -1.0 && d < 0.0)) throw std::domain_error("classify_square_antipersistent: -1 < d < 0");
    return {MemoryClass::Label::LM0, 0.0,
            "square of an antipersistent process: bounded, slowly varying spectrum at zero"};
}

MemoryClass classify_type1_square(double d) {
    if (!(d > 0.5 && d < 1.0)) throw std::domain_error("classify_type1_square: 1/2 < d < 1");
    return {MemoryClass::Label::LM, d,
            "square of the integrated process keeps the memory parameter, rank-independent"};
}

} // namespace longmem
