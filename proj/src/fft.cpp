#include "longmem/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace longmem::fft {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void transform(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");
    if (n == 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // per-call twiddle table keeps rounding error flat across stages
    const double sgn = inverse ? 1.0 : -1.0;
    std::vector<std::complex<double>> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double ang = sgn * 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        w[k] = {std::cos(ang), std::sin(ang)};
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w[k * step];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }

    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

namespace {

std::vector<std::complex<double>> dft_pow2(const std::vector<double>& x) {
    std::vector<std::complex<double>> a(x.begin(), x.end());
    transform(a, false);
    return a;
}

// Bluestein: X_k = w^{k^2/2} * conv(x_t w^{t^2/2}, w^{-t^2/2})_k.
// The quadratic phase is reduced mod 2n in integer arithmetic so the angle
// stays accurate for large t.
std::vector<std::complex<double>> dft_bluestein(const std::vector<double>& x) {
    const std::size_t n = x.size();
    const std::size_t two_n = 2 * n;
    auto chirp = [&](std::size_t t) {
        std::size_t m = (t % two_n) * (t % two_n) % two_n; // t^2 mod 2n
        double ang = -M_PI * static_cast<double>(m) / static_cast<double>(n);
        return std::complex<double>(std::cos(ang), std::sin(ang));
    };

    const std::size_t L = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> a(L), b(L);
    for (std::size_t t = 0; t < n; ++t) a[t] = x[t] * chirp(t);
    b[0] = {1.0, 0.0};
    for (std::size_t t = 1; t < n; ++t) b[t] = b[L - t] = std::conj(chirp(t));

    transform(a, false);
    transform(b, false);
    for (std::size_t i = 0; i < L; ++i) a[i] *= b[i];
    transform(a, true);

    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp(k);
    return out;
}

} // namespace

std::vector<std::complex<double>> dft_real(const std::vector<double>& x) {
    const std::size_t n = x.size();
    if (n == 0) throw std::invalid_argument("dft_real: empty input");
    if ((n & (n - 1)) == 0) return dft_pow2(x);
    return dft_bluestein(x);
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("convolve: empty input");
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t L = next_pow2(out_len);
    // pack both real inputs into one complex transform
    std::vector<std::complex<double>> z(L);
    for (std::size_t i = 0; i < a.size(); ++i) z[i] += std::complex<double>(a[i], 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) z[i] += std::complex<double>(0.0, b[i]);
    transform(z, false);
    std::vector<std::complex<double>> prod(L);
    for (std::size_t k = 0; k < L; ++k) {
        std::size_t kr = (L - k) & (L - 1);
        std::complex<double> fa = 0.5 * (z[k] + std::conj(z[kr]));
        std::complex<double> fb = std::complex<double>(0.0, -0.5) * (z[k] - std::conj(z[kr]));
        prod[k] = fa * fb;
    }
    transform(prod, true);
    std::vector<double> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = prod[i].real();
    return out;
}

} // namespace longmem::fft
