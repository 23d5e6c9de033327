#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "longmem/fft.hpp"
#include "longmem/rng.hpp"

using namespace longmem;

namespace {

// O(n^2) reference transform
std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            double ang = -2.0 * M_PI * static_cast<double>(t) * static_cast<double>(k) /
                         static_cast<double>(n);
            acc += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.next_uniform() * 2.0 - 1.0;
    return x;
}

} // namespace

TEST_CASE("next_pow2") {
    CHECK(fft::next_pow2(1) == 1);
    CHECK(fft::next_pow2(2) == 2);
    CHECK(fft::next_pow2(3) == 4);
    CHECK(fft::next_pow2(1000) == 1024);
    CHECK(fft::next_pow2(1024) == 1024);
}

TEST_CASE("dft of a small known vector") {
    // DFT([1,2,3,4]) = [10, -2+2i, -2, -2-2i]
    auto F = fft::dft_real({1.0, 2.0, 3.0, 4.0});
    REQUIRE(F.size() == 4);
    CHECK(F[0].real() == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(F[0].imag() == doctest::Approx(0.0).scale(1).epsilon(1e-14));
    CHECK(F[1].real() == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(F[1].imag() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(F[2].real() == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(F[3].imag() == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("radix-2 and bluestein paths agree with the naive transform") {
    for (std::size_t n : {16u, 12u, 37u, 200u}) {
        auto x = random_vector(n, 1234 + n);
        auto got = fft::dft_real(x);
        auto want = naive_dft(x);
        REQUIRE(got.size() == n);
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(got[k] - want[k]));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("inverse transform round-trips") {
    auto x = random_vector(64, 99);
    std::vector<std::complex<double>> a(x.begin(), x.end());
    fft::transform(a, false);
    fft::transform(a, true);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(a[i] - std::complex<double>(x[i])));
    CHECK(worst < 1e-12);
}

TEST_CASE("parseval identity") {
    auto x = random_vector(128, 5);
    auto F = fft::dft_real(x);
    double time_energy = 0.0, freq_energy = 0.0;
    for (double v : x) time_energy += v * v;
    for (const auto& f : F) freq_energy += std::norm(f);
    CHECK(freq_energy / static_cast<double>(x.size()) ==
          doctest::Approx(time_energy).epsilon(1e-12));
}

TEST_CASE("linear convolution") {
    auto c = fft::convolve({1.0, 2.0, 3.0}, {4.0, 5.0, 6.0});
    REQUIRE(c.size() == 5);
    const double want[] = {4.0, 13.0, 28.0, 27.0, 18.0};
    for (std::size_t i = 0; i < 5; ++i) CHECK(c[i] == doctest::Approx(want[i]).epsilon(1e-13));

    // against the direct O(n m) sum on awkward sizes
    auto a = random_vector(123, 7);
    auto b = random_vector(57, 8);
    auto fast = fft::convolve(a, b);
    REQUIRE(fast.size() == a.size() + b.size() - 1);
    for (std::size_t k = 0; k < fast.size(); k += 11) {
        double direct = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (k >= i && k - i < b.size()) direct += a[i] * b[k - i];
        CHECK(fast[k] == doctest::Approx(direct).epsilon(1e-10).scale(1.0));
    }
}
