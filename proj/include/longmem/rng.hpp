#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace longmem {

namespace detail {
// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

/**
 * Counter-based generator.  Output k is a pure function of (seed, stream, k),
 * so streams never share state: replication r of an experiment simply uses
 * seed base+r and draws from counter zero.  Quality is splitmix64-grade,
 * which is plenty for Monte Carlo work here.
 */
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(detail::mix64(detail::mix64(seed) ^ ~detail::mix64(stream))) {}

    std::uint64_t next_u64() { return detail::mix64(key_ ^ detail::mix64(++counter_)); }

    // uniform on (0,1), both endpoints excluded
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal, Box-Muller with cached partner
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Gamma(alpha, 1), Marsaglia-Tsang squeeze
    double next_gamma(double alpha) {
        if (!(alpha > 0.0)) throw std::domain_error("next_gamma: alpha > 0");
        if (alpha < 1.0) {
            double u = next_uniform();
            return next_gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
        }
        double d = alpha - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u = next_uniform();
            double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Student t with nu degrees of freedom (not variance-standardized)
    double next_student_t(double nu) {
        double z = next_normal();
        double chisq = 2.0 * next_gamma(0.5 * nu);
        return z / std::sqrt(chisq / nu);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace longmem
