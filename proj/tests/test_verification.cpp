#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "longmem/farima.hpp"
#include "longmem/rng.hpp"
#include "longmem/transforms.hpp"
#include "longmem/verification.hpp"

using namespace longmem;

TEST_CASE("elementary symmetric polynomials: hand values and edge cases") {
    std::vector<double> c{1.0, 2.0, 3.0};
    CHECK(elementary_symmetric(c, 0) == doctest::Approx(1.0));
    CHECK(elementary_symmetric(c, 1) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(elementary_symmetric(c, 2) == doctest::Approx(11.0).epsilon(1e-14));
    CHECK(elementary_symmetric(c, 3) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(elementary_symmetric(c, 4) == 0.0);
    CHECK_THROWS_AS(elementary_symmetric(c, -1), std::invalid_argument);

    // rescaling keeps the power sums finite for huge entries
    std::vector<double> big{1e150, 2e150, -3e150};
    double e2 = elementary_symmetric(big, 2);
    CHECK(std::isfinite(e2));
    CHECK(e2 == doctest::Approx(-7e300).epsilon(1e-13));

    std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(elementary_symmetric(zeros, 2) == 0.0);
}

TEST_CASE("newton identities agree with subset enumeration") {
    CounterRng rng(301);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> c(12);
        for (auto& v : c) v = 2.0 * rng.next_uniform() - 1.0;
        for (int k = 1; k <= 4; ++k) {
            double want = elementary_symmetric_enumeration(c, k);
            double got = elementary_symmetric(c, k);
            CHECK(std::fabs(got - want) <= 1e-12 * std::max(1.0, std::fabs(want)));
        }
    }
    CHECK(check_newton_vs_enumeration(17).passed);
}

TEST_CASE("uu leading covariance reduces to e_k of the lag products") {
    std::vector<double> a{1.0, std::sqrt(2.0), std::sqrt(3.0)};
    // c_i = a_i^2 = {1, 2, 3}, e_2 = 11
    CHECK(uu_leading_covariance(a, 2, 0, 1.0) == doctest::Approx(11.0).epsilon(1e-13));
    // h = 1: c = {a0 a1, a1 a2} = {sqrt 2, sqrt 6}, e_2 = sqrt 12
    CHECK(uu_leading_covariance(a, 2, 1, 1.0) ==
          doctest::Approx(std::sqrt(12.0)).epsilon(1e-13));
    CHECK(uu_leading_covariance(a, 2, 0, 2.0) == doctest::Approx(44.0).epsilon(1e-13));

    // an MA(1) has a single nonzero lag product at h = 1, so e_2 vanishes
    std::vector<double> ma1{1.0, 0.7};
    CHECK(uu_leading_covariance(ma1, 2, 1, 2.0) == 0.0);
    // lags at or past the end leave no products at all
    CHECK(uu_leading_covariance(a, 2, 2, 1.0) == 0.0);
    CHECK(uu_leading_covariance(a, 1, 3, 1.0) == 0.0);

    CHECK_THROWS_AS(uu_leading_covariance(a, 0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(uu_leading_covariance(a, 7, 0, 1.0), std::domain_error);
}

TEST_CASE("square transform covariance oracle on a = (1, 0.5)") {
    std::vector<double> a{1.0, 0.5};
    CHECK(square_transform_cov_oracle(a, 0, 0.0) == doctest::Approx(3.125).epsilon(1e-14));
    CHECK(square_transform_cov_oracle(a, 0, 1.0) == doctest::Approx(4.1875).epsilon(1e-14));
    CHECK(square_transform_cov_oracle(a, 1, 1.0) == doctest::Approx(0.75).epsilon(1e-14));
    // lag past the end: empty sums
    CHECK(square_transform_cov_oracle(a, 2, 1.0) == 0.0);
}

TEST_CASE("streaming fractional pair sums match frozen references and a direct loop") {
    auto [p1, p2] = fractional_pair_sums(0.3, 2, 50);
    CHECK(p1 == doctest::Approx(0.373323644994447753).epsilon(1e-14));
    CHECK(p2 == doctest::Approx(0.0413053686394415947).epsilon(1e-14));

    const auto a = fractional_coefficients(0.3, 52);
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t i = 0; i < 50; ++i) {
        double prod = a[i] * a[i + 2];
        d1 += prod;
        d2 += prod * prod;
    }
    CHECK(p1 == doctest::Approx(d1).epsilon(1e-13));
    CHECK(p2 == doctest::Approx(d2).epsilon(1e-13));

    auto [s0, s0sq] = fractional_pair_sums(0.3, 0, 64);
    CHECK(s0 == doctest::Approx(1.26341410160454115).epsilon(1e-14));
    (void)s0sq;

    CHECK_THROWS_AS(fractional_pair_sums(0.5, 1, 100), std::domain_error);
    CHECK_THROWS_AS(fractional_pair_sums(0.3, 1, 0), std::invalid_argument);
}

TEST_CASE("aggregated-pair variance sums match high-precision references") {
    // Z_n = X_n + X_{n-1}, X the cumulative sum of stationary increments with
    // memory parameter -0.25.  Direct double loops against frozen values.
    const double dy = -0.25;
    const auto g = autocovariances_f0d0(dy, 210);

    auto var_z = [&](std::size_t n) {
        double acc = g[0];
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                acc += 4.0 * g[static_cast<std::size_t>(
                                 std::llabs(static_cast<long long>(i) - static_cast<long long>(j)))];
        for (std::size_t j = 1; j < n; ++j) acc += 4.0 * g[n - j];
        return acc;
    };
    auto cov_z = [&](std::size_t n, std::size_t h) {
        double acc = g[h];
        for (std::size_t i = 1; i < n + h; ++i)
            for (std::size_t j = 1; j < n; ++j)
                acc += 4.0 * g[static_cast<std::size_t>(
                                 std::llabs(static_cast<long long>(i) - static_cast<long long>(j)))];
        for (std::size_t j = 1; j < n; ++j) acc += 2.0 * g[n + h - j];
        for (std::size_t i = 1; i < n + h; ++i)
            acc += 2.0 * g[static_cast<std::size_t>(
                             std::llabs(static_cast<long long>(n) - static_cast<long long>(i)))];
        return acc;
    };

    CHECK(var_z(10) == doctest::Approx(16.4344474313758185).epsilon(1e-12));
    CHECK(var_z(100) == doctest::Approx(60.4347718869322411).epsilon(1e-12));
    CHECK(var_z(105) == doctest::Approx(62.0149445656796864).epsilon(1e-12));
    CHECK(cov_z(100, 5) == doctest::Approx(56.2592348814283354).epsilon(1e-12));
    double corr = cov_z(100, 5) / std::sqrt(var_z(100) * var_z(105));
    CHECK(corr == doctest::Approx(0.918971828323508306).epsilon(1e-12));
}

TEST_CASE("variance growth check passes and reports the expected shape") {
    auto rep = check_var_zn_growth(0.75, {100, 1000, 10000}, 5);
    CHECK(rep.passed);
    REQUIRE(rep.metrics.size() == 5);
    CHECK(rep.metrics[3].label == "corr_at_n_max");
    CHECK(rep.metrics[3].computed == doctest::Approx(0.99218).epsilon(2e-4));
    CHECK(rep.metrics[4].label == "identity_gap_vs_tail_bound");
    CHECK(rep.metrics[4].computed == doctest::Approx(1.0).epsilon(0.05));

    CHECK_THROWS_AS(check_var_zn_growth(0.4, {100}, 5), std::domain_error);
    CHECK_THROWS_AS(check_var_zn_growth(0.75, {}, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_var_zn_growth(0.75, {100}, 0), std::invalid_argument);
}

TEST_CASE("mc covariance tracks the truncated linear-process covariance") {
    ProcessSpec spec;
    spec.d = 0.3;
    const Transform identity = Transform::parse("pow:1");

    McCovariance h0 = mc_covariance(identity, spec, 0, 150000, 2024, 64);
    CHECK(!h0.unstable);
    CHECK(h0.reps == 150000);
    CHECK(h0.std_error > 0.0);
    CHECK(std::fabs(h0.estimate - 1.26341410160454115) < 5.0 * h0.std_error);

    McCovariance h2 = mc_covariance(identity, spec, 2, 150000, 2024, 64);
    CHECK(std::fabs(h2.estimate - 0.378063000419301571) < 5.0 * h2.std_error);

    CHECK_THROWS_AS(mc_covariance(identity, spec, 0, 1, 1, 64), std::invalid_argument);
}

TEST_CASE("desk checks pass at reduced sizes") {
    CHECK(check_f_positivity(10000).passed);
    CHECK(check_gauss_reduction(-0.3, 5).passed);
    CHECK(check_autocovariance_truncation().passed);
    CHECK(check_uu_stabilization().passed);
    CHECK(check_square_identity_mc(300000, 7).passed);

    CHECK_THROWS_AS(check_f_positivity(2), std::invalid_argument);
    CHECK_THROWS_AS(check_gauss_reduction(0.3, 5), std::domain_error);
}

TEST_CASE("check reports render to a table and csv") {
    CheckReport rep;
    rep.name = "demo";
    rep.params = "a=1, b=2";
    rep.add_metric("close", 1.0 + 1e-13, 1.0, 1e-12, false);
    rep.add_metric("far", 2.0, 1.0, 1e-12, false);
    rep.finalize();
    CHECK(rep.metrics[0].passed);
    CHECK(!rep.metrics[1].passed);
    CHECK(!rep.passed);

    CheckReport ok;
    ok.name = "fine";
    ok.add_metric("rel", 100.0, 100.0 + 1e-11, 1e-12, true);
    ok.finalize();
    CHECK(ok.passed);

    std::vector<CheckReport> reports{rep, ok};
    std::string table = render_check_table(reports);
    CHECK(table.find("[FAIL] demo") != std::string::npos);
    CHECK(table.find("[pass] fine") != std::string::npos);
    std::string csv = render_check_csv(reports);
    CHECK(csv.rfind("check,params,metric,computed,reference,tolerance,kind,passed\n", 0) == 0);
    // params commas must not break the csv grid
    CHECK(csv.find("demo,a=1; b=2,close") != std::string::npos);
}
