#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "longmem/special.hpp"

using namespace longmem;
using namespace longmem::special;

// Reference values computed with 30-digit arbitrary-precision arithmetic.

TEST_CASE("log_gamma matches high-precision references") {
    struct Row {
        double x, lg;
    };
    const Row rows[] = {
        {0.001, 6.90717888538385368},
        {0.1, 2.25271265173420596},
        {0.5, 0.572364942924700087},
        {1.0, 0.0},
        {1.5, -0.120782237635245222},
        {2.0, 0.0},
        {5.0, 3.17805383034794562},
        {10.3, 13.482036786138357},
        {100.0, 359.134205369575399},
        {1000.0, 5905.22042320918121},
    };
    for (const auto& r : rows) {
        double got = log_gamma(r.x);
        double scale = std::max(1.0, std::fabs(r.lg));
        CHECK(std::fabs(got - r.lg) <= 5e-13 * scale);
    }
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("gamma_signed handles negative arguments and poles") {
    struct Row {
        double x, g;
    };
    const Row rows[] = {
        {0.5, 1.77245385090551603},
        {-0.5, -3.54490770181103205},
        {-1.5, 2.3632718012073547},
        {-2.5, -0.945308720482941881},
        {-0.3, -4.32685110882519262},
        {-3.7, 0.251643995902422644},
    };
    for (const auto& r : rows) {
        double got = gamma_signed(r.x).value();
        CHECK(std::fabs(got - r.g) <= 1e-12 * std::fabs(r.g));
    }
    CHECK_THROWS_AS(gamma_signed(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_signed(-1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_signed(-7.0), std::domain_error);
}

TEST_CASE("signed log values multiply and divide") {
    auto a = SignedLogValue::from_value(-3.0);
    auto b = SignedLogValue::from_value(2.0);
    CHECK((a * b).value() == doctest::Approx(-6.0).epsilon(1e-14));
    CHECK((a / b).value() == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK_THROWS_AS(a / SignedLogValue::from_value(0.0), std::domain_error);
}

TEST_CASE("gauss value at unit argument matches references") {
    // 2F1(d, h+d; h+1; 1) for the fractional-autocovariance reduction
    struct Row {
        double d;
        double h;
        double v;
    };
    const Row rows[] = {
        {-0.3, 1, 0.853332154904803184},
        {-0.3, 2, 0.742027960786785378},
        {-0.3, 5, 0.591988480423459554},
        {-0.1, 1, 0.92224958979932987},
        {-0.9, 3, 0.506054775671428045},
        {-0.45, 20, 0.277564538734529405},
    };
    for (const auto& r : rows) {
        double got = gauss_2f1_at_one(r.d, r.h + r.d, r.h + 1.0);
        CHECK(std::fabs(got - r.v) <= 1e-12 * r.v);
    }
    // requires c - a - b > 0
    CHECK_THROWS_AS(gauss_2f1_at_one(0.5, 0.6, 1.0), std::domain_error);
    CHECK_THROWS_AS(gauss_2f1_at_one(0.1, 0.1, 0.0), std::domain_error);
}

TEST_CASE("hypergeometric partial sums converge to the gauss value") {
    const double limit = 0.853332154904803184; // 2F1(-0.3, 0.7; 2; 1)
    CHECK(hypergeometric_partial_sum(-0.3, 0.7, 2.0, 1.0, 10) ==
          doctest::Approx(0.856195915904764601).epsilon(1e-14));
    CHECK(hypergeometric_partial_sum(-0.3, 0.7, 2.0, 1.0, 10000) ==
          doctest::Approx(0.853332199207002217).epsilon(1e-13));
    double far = hypergeometric_partial_sum(-0.3, 0.7, 2.0, 1.0, 1000000);
    CHECK(std::fabs(far - limit) < 1e-6);

    CHECK(hypergeometric_partial_sum(0.3, 0.7, 1.1, 0.0, 50) == 1.0);
    CHECK(hypergeometric_partial_sum(0.3, 0.7, 1.1, 1.0, 1) == 1.0);
    // terminating series: a = -2 kills every term past n = 2, sum is exactly 0
    CHECK(hypergeometric_partial_sum(-2.0, 1.0, 1.0, 1.0, 50) == 0.0);
    CHECK_THROWS_AS(hypergeometric_partial_sum(0.3, 0.7, 1.1, 1.5, 10), std::domain_error);
    CHECK_THROWS_AS(hypergeometric_partial_sum(0.3, 0.7, -2.0, 1.0, 10), std::domain_error);
}
