#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "longmem/transforms.hpp"

using namespace longmem;

TEST_CASE("parse and evaluate the grammar") {
    Transform sq = Transform::parse("pow:2");
    CHECK(sq(3.0) == 9.0);
    CHECK(sq(-2.0) == 4.0);
    CHECK(sq.str() == "pow:2");

    Transform herm3 = Transform::parse("poly:0,-3,0,1"); // x^3 - 3x
    CHECK(herm3(2.0) == doctest::Approx(2.0));
    CHECK(herm3(0.0) == 0.0);
    CHECK(herm3.str() == "poly:0,-3,0,1");

    Transform s = Transform::parse("sin");
    CHECK(s(M_PI / 2.0) == doctest::Approx(1.0));
    CHECK(s.str() == "sin");

    Transform e = Transform::parse("exp");
    CHECK(e(1.0) == doctest::Approx(M_E));
    CHECK(e.str() == "exp");

    Transform ind = Transform::parse("ind:0.1");
    CHECK(ind(0.1) == 1.0); // closed inequality
    CHECK(ind(0.1000001) == 0.0);
    CHECK(ind(-5.0) == 1.0);
    CHECK(ind.str() == "ind:0.1");

    Transform call = Transform::parse("call:45.5");
    CHECK(call(50.0) == doctest::Approx(4.5));
    CHECK(call(40.0) == 0.0);
    CHECK(call(45.5) == 0.0);
    CHECK(call.str() == "call:45.5");

    Transform put = Transform::parse("put:45.5");
    CHECK(put(40.0) == doctest::Approx(5.5));
    CHECK(put(50.0) == 0.0);
    CHECK(put.str() == "put:45.5");
}

TEST_CASE("string round trips preserve equality") {
    for (const char* text : {"pow:1", "pow:2", "pow:4", "poly:0,-3,0,1", "poly:0,0,-6,0,1",
                             "poly:1.5,-2", "sin", "exp", "ind:0.1", "call:45.5", "put:9"}) {
        Transform t = Transform::parse(text);
        CHECK(Transform::parse(t.str()) == t);
        CHECK(t.str() == text);
    }
    // pure powers written in poly form come back in pow form
    CHECK(Transform::parse("poly:0,0,1").str() == "pow:2");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Transform::parse("pow:0"), std::invalid_argument);
    CHECK_THROWS_AS(Transform::parse("pow:2.5"), std::invalid_argument);
    CHECK_THROWS_AS(Transform::parse("pow:"), std::invalid_argument);
    CHECK_THROWS_AS(Transform::parse("ind"), std::invalid_argument);
    CHECK_THROWS_AS(Transform::parse("call:abc"), std::invalid_argument);
    CHECK_THROWS_AS(Transform::parse("poly:1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Transform::parse("tanh"), std::invalid_argument);
}

TEST_CASE("apply maps a series and tags its provenance") {
    Series s;
    s.values = {1.0, -2.0, 3.0};
    Series t = apply(Transform::parse("pow:2"), s);
    CHECK(t.values == std::vector<double>{1.0, 4.0, 9.0});
    CHECK(t.transform == "pow:2");
    Series u = apply(Transform::parse("sin"), t);
    CHECK(u.transform == "pow:2|sin");
    CHECK(u.values[0] == doctest::Approx(std::sin(1.0)));
}
