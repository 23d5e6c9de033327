#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "longmem/innovations.hpp"
#include "longmem/rng.hpp"

using namespace longmem;

namespace {

InnovationSpec make(InnovationLaw law, double nu, bool standardize, std::uint64_t seed = 0) {
    InnovationSpec s;
    s.law = law;
    s.nu = nu;
    s.standardize = standardize;
    s.seed = seed;
    return s;
}

} // namespace

TEST_CASE("population moments") {
    CHECK(innovation_variance(make(InnovationLaw::Gaussian, 0, true)) == 1.0);
    CHECK(innovation_mean(make(InnovationLaw::Gaussian, 0, true)) == 0.0);
    CHECK(innovation_kappa4(make(InnovationLaw::Gaussian, 0, true)) == 0.0);

    CHECK(innovation_variance(make(InnovationLaw::StudentT, 10, false)) ==
          doctest::Approx(1.25).epsilon(1e-15));
    CHECK(innovation_variance(make(InnovationLaw::StudentT, 10, true)) == 1.0);
    CHECK(innovation_mean(make(InnovationLaw::StudentT, 10, true)) == 0.0);
    // excess kurtosis 6/(nu-4) of the standardized t
    CHECK(innovation_kappa4(make(InnovationLaw::StudentT, 10, true)) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(innovation_kappa4(make(InnovationLaw::StudentT, 6, true)) ==
          doctest::Approx(3.0).epsilon(1e-13));

    // E|t_10| and Var|t_10|, 30-digit references
    CHECK(innovation_mean(make(InnovationLaw::AbsStudentT, 10, false)) ==
          doctest::Approx(0.864685297702291224).epsilon(1e-13));
    CHECK(innovation_variance(make(InnovationLaw::AbsStudentT, 10, false)) ==
          doctest::Approx(0.5023193359375).epsilon(1e-13));
    CHECK(innovation_mean(make(InnovationLaw::AbsStudentT, 10, true)) ==
          doctest::Approx(1.22002330515756215).epsilon(1e-13));
    CHECK(innovation_variance(make(InnovationLaw::AbsStudentT, 10, true)) == 1.0);
}

TEST_CASE("moment domain errors") {
    CHECK_THROWS_AS(innovation_variance(make(InnovationLaw::StudentT, 0.0, true)), std::domain_error);
    CHECK_THROWS_AS(innovation_variance(make(InnovationLaw::StudentT, 1.5, true)), std::domain_error);
    CHECK_THROWS_AS(innovation_kappa4(make(InnovationLaw::StudentT, 3.5, true)), std::domain_error);
    CHECK_THROWS_AS(innovation_kappa4(make(InnovationLaw::AbsStudentT, 10, true)), std::domain_error);
}

TEST_CASE("draw_stream is deterministic in the spec") {
    auto a = draw_stream(make(InnovationLaw::StudentT, 10, true, 7), 64);
    auto b = draw_stream(make(InnovationLaw::StudentT, 10, true, 7), 64);
    auto c = draw_stream(make(InnovationLaw::StudentT, 10, true, 8), 64);
    CHECK(a == b);
    CHECK(a != c);
    CHECK_THROWS_AS(draw_stream(make(InnovationLaw::Gaussian, 0, true), 0), std::domain_error);
}

TEST_CASE("drawer matches draw_stream and per-draw access") {
    InnovationSpec spec = make(InnovationLaw::AbsStudentT, 10, true, 42);
    auto stream = draw_stream(spec, 32);
    InnovationDrawer drawer(spec);
    CounterRng rng(42);
    for (double want : stream) CHECK(drawer(rng) == want);
}

TEST_CASE("sample moments agree with the standardized population") {
    for (auto law : {InnovationLaw::Gaussian, InnovationLaw::StudentT, InnovationLaw::AbsStudentT}) {
        InnovationSpec spec = make(law, 10, true, 2024);
        const std::size_t n = 200000;
        auto x = draw_stream(spec, n);
        double mean = 0.0;
        for (double v : x) mean += v;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double v : x) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n - 1);
        double want_mean = innovation_mean(spec);
        // mean se ~ 1/sqrt(n), variance se below 0.01 for these tails
        CHECK(std::fabs(mean - want_mean) < 4.0 / std::sqrt(static_cast<double>(n)));
        CHECK(std::fabs(var - 1.0) < 0.04);
    }
}
