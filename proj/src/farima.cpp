#include "longmem/farima.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "longmem/fft.hpp"
#include "longmem/special.hpp"

namespace longmem {

namespace {

void validate_process(const ProcessSpec& spec) {
    if (spec.kind == ProcessKind::StationaryFarima) {
        if (!(spec.d > -1.0 && spec.d < 0.5))
            throw std::domain_error("ProcessSpec: StationaryFarima needs -1 < d < 1/2");
    } else {
        if (!(spec.d > 0.5 && spec.d < 1.0))
            throw std::domain_error("ProcessSpec: TypeI needs 1/2 < d < 1");
    }
    if (!ar_polynomial_stable(spec.ar))
        throw std::domain_error("ProcessSpec: AR roots must lie outside the unit disk");
}

} // namespace

std::vector<double> fractional_coefficients(double d, std::size_t M) {
    if (!(d > -1.0 && d < 0.5)) throw std::domain_error("fractional_coefficients: -1 < d < 1/2");
    if (M < 1) throw std::domain_error("fractional_coefficients: M >= 1");
    std::vector<double> a(M);
    a[0] = 1.0;
    for (std::size_t i = 1; i < M; ++i)
        a[i] = a[i - 1] * (static_cast<double>(i) - 1.0 + d) / static_cast<double>(i);
    return a;
}

std::vector<double> arma_psi_weights(const std::vector<double>& ar,
                                     const std::vector<double>& ma, std::size_t M) {
    if (M < 1) throw std::domain_error("arma_psi_weights: M >= 1");
    if (!ar_polynomial_stable(ar)) throw std::domain_error("arma_psi_weights: unstable AR polynomial");
    const std::size_t p = ar.size(), q = ma.size();
    std::vector<double> psi(M, 0.0);
    psi[0] = 1.0;
    for (std::size_t j = 1; j < M; ++j) {
        double v = (j <= q) ? ma[j - 1] : 0.0;
        for (std::size_t i = 1; i <= std::min(j, p); ++i) v += ar[i - 1] * psi[j - i];
        psi[j] = v;
    }
    return psi;
}

bool ar_polynomial_stable(const std::vector<double>& ar) {
    std::size_t p = ar.size();
    while (p > 0 && ar[p - 1] == 0.0) --p; // ignore trailing zero coefficients
    if (p == 0) return true;
    if (p == 1) return std::fabs(ar[0]) < 1.0 / (1.0 + 1e-8);

    // Durand-Kerner on phi(z) = 1 - ar[0] z - ... - ar[p-1] z^p,
    // normalized to monic form.
    using C = std::complex<double>;
    std::vector<C> coef(p + 1); // coef[k] multiplies z^k
    coef[0] = 1.0;
    for (std::size_t k = 1; k <= p; ++k) coef[k] = -ar[k - 1];
    C lead = coef[p];
    for (auto& c : coef) c /= lead;

    auto eval = [&](C z) {
        C v = coef[p];
        for (std::size_t k = p; k-- > 0;) v = v * z + coef[k];
        return v;
    };

    std::vector<C> r(p);
    C w(0.4, 0.9);
    r[0] = w;
    for (std::size_t i = 1; i < p; ++i) r[i] = r[i - 1] * w;
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
            C den = 1.0;
            for (std::size_t j = 0; j < p; ++j)
                if (j != i) den *= (r[i] - r[j]);
            C delta = eval(r[i]) / den;
            r[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    for (const auto& root : r)
        if (!(std::abs(root) > 1.0 + 1e-8)) return false;
    return true;
}

std::vector<double> process_ma_coefficients(const ProcessSpec& spec, std::size_t M) {
    validate_process(spec);
    const double d_eff = (spec.kind == ProcessKind::TypeI) ? spec.d - 1.0 : spec.d;
    std::vector<double> frac = fractional_coefficients(d_eff, M);
    if (spec.ar.empty() && spec.ma.empty()) return frac;
    std::vector<double> psi = arma_psi_weights(spec.ar, spec.ma, M);
    std::vector<double> c = fft::convolve(frac, psi);
    c.resize(M);
    return c;
}

double process_marginal_sd(const ProcessSpec& spec, std::size_t M) {
    std::vector<double> c = process_ma_coefficients(spec, M);
    double s = 0.0;
    for (double ci : c) s += ci * ci;
    return std::sqrt(innovation_variance(spec.innovation) * s);
}

Series simulate(const ProcessSpec& spec, std::size_t n, std::size_t M, std::uint64_t seed) {
    validate_process(spec);
    if (n < 1) throw std::domain_error("simulate: n >= 1");
    if (M == 0) M = 2 * n;
    if (M < n) throw std::domain_error("simulate: truncation M must be >= n");

    std::vector<double> c = process_ma_coefficients(spec, M);

    InnovationSpec innov = spec.innovation;
    innov.seed = seed;
    std::vector<double> eps = draw_stream(innov, n + M);

    // conv[k] = sum_i c_i eps_{k-i}; rows k = M-1 .. n+M-2 are fully inside the window
    std::vector<double> conv = fft::convolve(c, eps);
    std::vector<double> x(n);
    for (std::size_t t = 0; t < n; ++t) x[t] = conv[t + M - 1];

    if (spec.kind == ProcessKind::TypeI) {
        // X_n = sum_{j<=n} Y_j from X_0 = 0, compensated accumulation
        double sum = 0.0, comp = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            double y = x[t] - comp;
            double next = sum + y;
            comp = (next - sum) - y;
            sum = next;
            x[t] = sum;
        }
    }

    Series s;
    s.values = std::move(x);
    s.spec = spec;
    s.spec.innovation.seed = seed;
    s.seed = seed;
    s.truncation = M;
    s.burn_in = 0;
    return s;
}

double autocovariance_f0d0(double d, std::size_t h) {
    std::vector<double> g = autocovariances_f0d0(d, h);
    return g[h];
}

std::vector<double> autocovariances_f0d0(double d, std::size_t max_lag) {
    if (!(d > -0.5 && d < 0.5) || d == 0.0)
        throw std::domain_error("autocovariance_f0d0: -1/2 < d < 1/2, d != 0");
    // gamma(0) = Gamma(1-2d) / Gamma(1-d)^2, then the stable ratio recursion
    double g0 = std::exp(special::log_gamma(1.0 - 2.0 * d) - 2.0 * special::log_gamma(1.0 - d));
    std::vector<double> g(max_lag + 1);
    g[0] = g0;
    for (std::size_t h = 1; h <= max_lag; ++h)
        g[h] = g[h - 1] * (static_cast<double>(h) - 1.0 + d) / (static_cast<double>(h) - d);
    return g;
}

} // namespace longmem
