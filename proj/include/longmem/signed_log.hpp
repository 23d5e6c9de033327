#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace longmem {

/**
 * Log-magnitude representation of a signed real.
 *
 * Products and ratios of Gamma values overflow double range long before the
 * ratio itself does, so those chains are composed here and exponentiated once
 * at the end.  sign == 0 encodes an exact zero; log_magnitude is then ignored.
 */
struct SignedLogValue {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static SignedLogValue from_value(double x) {
        if (x == 0.0) return {};
        return {std::log(std::fabs(x)), x > 0.0 ? +1 : -1};
    }
    static SignedLogValue from_log(double log_mag, int s) {
        if (s == 0) return {};
        return {log_mag, s > 0 ? +1 : -1};
    }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_magnitude);
    }

    SignedLogValue operator*(const SignedLogValue& o) const {
        if (sign == 0 || o.sign == 0) return {};
        return {log_magnitude + o.log_magnitude, sign * o.sign};
    }
    SignedLogValue operator/(const SignedLogValue& o) const {
        if (o.sign == 0) throw std::domain_error("SignedLogValue: division by zero");
        if (sign == 0) return {};
        return {log_magnitude - o.log_magnitude, sign * o.sign};
    }
};

} // namespace longmem
