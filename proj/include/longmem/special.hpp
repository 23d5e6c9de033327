#pragma once

#include <cstddef>

#include "longmem/signed_log.hpp"

namespace longmem::special {

// ln Gamma(x) for x > 0.  Relative error well under 1e-12 on [1e-3, 1e3].
double log_gamma(double x);

// Gamma(x) for any non-pole x, as a signed log value.  Negative arguments are
// lifted into the positive half-line with Gamma(x) = Gamma(x+m) / (x (x+1) ...),
// never evaluated at a negative argument directly.
SignedLogValue gamma_signed(double x);

// Gauss's theorem: 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
// Requires c - a - b > 0 (the series diverges at z = 1 otherwise) and that none
// of c, c-a, c-b sits on a Gamma pole.
double gauss_2f1_at_one(double a, double b, double c);

// Partial sum of the hypergeometric series sum_n (a)_n (b)_n / ((c)_n n!) z^n,
// n < terms, by term-ratio recursion.  z in [0, 1].
double hypergeometric_partial_sum(double a, double b, double c, double z, std::size_t terms);

} // namespace longmem::special
