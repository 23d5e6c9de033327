#pragma once

#include <cstddef>
#include <vector>

namespace longmem {

struct Periodogram {
    std::vector<double> lambda; // lambda_j = 2 pi j / n, j = 1..floor(n/2)
    std::vector<double> power;  // I_j = |sum_t x_t e^{-i t lambda_j}|^2 / (2 pi n)
    std::size_t n = 0;
    bool degenerate = false;    // constant input: every ordinate is zero
};

struct MemoryEstimate {
    double d_hat = 0.0;
    double std_error = 0.0; // OLS slope standard error
    std::size_t bandwidth = 0;
    std::size_t n = 0;
    std::size_t j_min = 1, j_max = 0; // frequency index range used
    bool degenerate = false;
};

enum class GphRegressor { SinTransform, LogFrequency };

// Mean-centers internally; n >= 8.
Periodogram periodogram(const std::vector<double>& x);

// Log-periodogram regression of log I_j on log(4 sin^2(lambda_j / 2))
// (or on 2 log lambda_j), j = 1..m; d_hat = -slope.
// bandwidth = 0 picks floor(n^{4/5}).  Throws when m < 3 or m > n/2;
// a degenerate periodogram comes back flagged, not thrown.
MemoryEstimate gph_estimate(const std::vector<double>& x, std::size_t bandwidth = 0,
                            GphRegressor regressor = GphRegressor::SinTransform);

} // namespace longmem
