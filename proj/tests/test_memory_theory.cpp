#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "longmem/memory_theory.hpp"

using namespace longmem;

TEST_CASE("spectral classification by power rank") {
    MemoryClass c = classify_spectral(0.4, 2);
    CHECK(c.label == MemoryClass::Label::LM);
    CHECK(c.d_tilde == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(c.str() == "LM(0.3)");

    CHECK(classify_spectral(0.4, 1).str() == "LM(0.4)");
    CHECK(classify_spectral(0.4, 3).str() == "LM(0.2)");
    CHECK(classify_spectral(0.4, 4).str() == "LM(0.1)");
    CHECK(classify_spectral(0.2, 1).str() == "LM(0.2)");
    CHECK(classify_spectral(0.3, 1).str() == "LM(0.3)");

    // k(1-2d) > 1 with (k-1)(1-2d) < 1: short memory in the LM(0) sense
    MemoryClass z = classify_spectral(0.2, 2);
    CHECK(z.label == MemoryClass::Label::LM0);
    CHECK(z.str() == "LM(0)");

    // (k-1)(1-2d) >= 1: the theory is silent
    CHECK(classify_spectral(0.2, 3).label == MemoryClass::Label::OutOfScope);
    CHECK(classify_spectral(0.1, 4).label == MemoryClass::Label::OutOfScope);
    // the exact boundary k(1-2d) = 1 stays out of scope
    CHECK(classify_spectral(0.25, 2).label == MemoryClass::Label::OutOfScope);

    CHECK_THROWS_AS(classify_spectral(0.0, 1), std::domain_error);
    CHECK_THROWS_AS(classify_spectral(0.5, 1), std::domain_error);
    CHECK_THROWS_AS(classify_spectral(0.3, 0), std::domain_error);
}

TEST_CASE("covariance classification") {
    CHECK(classify_covariance(0.8, 1, true).label == MemoryClass::Label::LongMemoryCov);
    CHECK(classify_covariance(0.8, 2, true).label == MemoryClass::Label::ShortMemoryCov);
    // boundary k(2b-1) = 1: long when the slowly varying factor is constant
    CHECK(classify_covariance(0.75, 2, true).label == MemoryClass::Label::LongMemoryCov);
    CHECK(classify_covariance(0.75, 2, false).label == MemoryClass::Label::BoundaryLong);
    // beta close to 1/2 preserves long memory through high ranks
    CHECK(classify_covariance(0.55, 9, true).label == MemoryClass::Label::LongMemoryCov);
    CHECK_THROWS_AS(classify_covariance(0.5, 1, true), std::domain_error);
    CHECK_THROWS_AS(classify_covariance(1.0, 1, true), std::domain_error);
}

TEST_CASE("square transforms of special regimes") {
    MemoryClass anti = classify_square_antipersistent(-0.3);
    CHECK(anti.label == MemoryClass::Label::LM0);
    CHECK(anti.str() == "LM(0)");
    CHECK_THROWS_AS(classify_square_antipersistent(0.1), std::domain_error);
    CHECK_THROWS_AS(classify_square_antipersistent(-1.0), std::domain_error);

    MemoryClass t1 = classify_type1_square(0.75);
    CHECK(t1.label == MemoryClass::Label::LM);
    CHECK(t1.d_tilde == 0.75);
    CHECK(t1.str() == "LM(0.75)");
    CHECK_THROWS_AS(classify_type1_square(0.5), std::domain_error);
    CHECK_THROWS_AS(classify_type1_square(1.0), std::domain_error);
}

TEST_CASE("labels render and compare") {
    CHECK(classify_covariance(0.8, 1, true).str() == "long(cov)");
    CHECK(classify_covariance(0.8, 3, true).str() == "short(cov)");
    CHECK(classify_covariance(0.75, 2, false).str() == "boundary-long");
    CHECK(classify_spectral(0.2, 3).str() == "out-of-scope");
    CHECK(classify_spectral(0.4, 2) == classify_spectral(0.4, 2));
    CHECK_FALSE(classify_spectral(0.4, 2) == classify_spectral(0.4, 1));
    // every classification carries a self-contained rule statement
    CHECK_FALSE(classify_spectral(0.4, 2).rule.empty());
    CHECK_FALSE(classify_covariance(0.75, 2, false).rule.empty());
}
