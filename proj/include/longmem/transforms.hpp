#pragma once

#include <string>
#include <vector>

#include "longmem/farima.hpp"

namespace longmem {

/**
 * Pointwise transformation K(x).  Parseable from a compact string grammar:
 *   "pow:2"          x^2 (any positive integer power)
 *   "poly:0,-3,0,1"  polynomial, ascending coefficients (here x^3 - 3x)
 *   "sin"            sin x
 *   "exp"            e^x (caller attests a light-tailed marginal)
 *   "ind:0.1"        indicator I(x <= c), closed inequality
 *   "call:45.5"      call payoff (x - C)^+
 *   "put:45.5"       put payoff (C - x)^+
 */
struct Transform {
    enum class Kind { Polynomial, Sin, Exp, Indicator, CallPayoff, PutPayoff };

    Kind kind = Kind::Polynomial;
    std::vector<double> coeffs{0.0, 1.0}; // ascending; Polynomial only
    double level = 0.0;                   // threshold or strike

    static Transform parse(const std::string& text);
    std::string str() const;

    double operator()(double x) const;

    bool operator==(const Transform&) const = default;
};

std::vector<double> apply(const Transform& t, const std::vector<double>& xs);
Series apply(const Transform& t, const Series& s);

} // namespace longmem
