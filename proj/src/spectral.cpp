#include "longmem/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "longmem/fft.hpp"

namespace longmem {

Periodogram periodogram(const std::vector<double>& x) {
    const std::size_t n = x.size();
    if (n < 8) throw std::invalid_argument("periodogram: n >= 8");

    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> centered(n);
    bool constant = true;
    for (std::size_t t = 0; t < n; ++t) {
        centered[t] = x[t] - mean;
        if (x[t] != x[0]) constant = false;
    }

    Periodogram out;
    out.n = n;
    out.degenerate = constant;
    const std::size_t half = n / 2;
    out.lambda.resize(half);
    out.power.resize(half);
    if (constant) {
        for (std::size_t j = 1; j <= half; ++j) {
            out.lambda[j - 1] = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
            out.power[j - 1] = 0.0;
        }
        return out;
    }

    std::vector<std::complex<double>> F = fft::dft_real(centered);
    const double norm = 1.0 / (2.0 * M_PI * static_cast<double>(n));
    for (std::size_t j = 1; j <= half; ++j) {
        out.lambda[j - 1] = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
        out.power[j - 1] = std::norm(F[j]) * norm;
    }
    return out;
}

MemoryEstimate gph_estimate(const std::vector<double>& x, std::size_t bandwidth,
                            GphRegressor regressor) {
    const std::size_t n = x.size();
    std::size_t m = bandwidth;
    if (m == 0) m = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 0.8)));
    if (m < 3) throw std::invalid_argument("gph_estimate: bandwidth m >= 3");
    if (m > n / 2) throw std::invalid_argument("gph_estimate: bandwidth m <= n/2");

    Periodogram pg = periodogram(x);

    MemoryEstimate est;
    est.bandwidth = m;
    est.n = n;
    est.j_min = 1;
    est.j_max = m;

    std::vector<double> xs(m), ys(m);
    for (std::size_t j = 1; j <= m; ++j) {
        double I = pg.power[j - 1];
        if (!(I > 0.0) || !std::isfinite(I)) {
            est.degenerate = true;
            est.d_hat = std::numeric_limits<double>::quiet_NaN();
            est.std_error = std::numeric_limits<double>::quiet_NaN();
            return est;
        }
        double lam = pg.lambda[j - 1];
        double s = 2.0 * std::sin(0.5 * lam);
        xs[j - 1] = (regressor == GphRegressor::SinTransform) ? std::log(s * s) : 2.0 * std::log(lam);
        ys[j - 1] = std::log(I);
    }

    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= static_cast<double>(m);
    ybar /= static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double dx = xs[i] - xbar;
        sxx += dx * dx;
        sxy += dx * (ys[i] - ybar);
    }
    double slope = sxy / sxx;
    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double resid = (ys[i] - ybar) - slope * (xs[i] - xbar);
        rss += resid * resid;
    }
    est.d_hat = -slope;
    est.std_error = std::sqrt(rss / (static_cast<double>(m) - 2.0) / sxx);
    return est;
}

} // namespace longmem
