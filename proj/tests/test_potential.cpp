#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "descm/potential.hpp"

using descm::Complex;
using descm::RationalPotential;

TEST_CASE("validate accepts the exact-spectrum potential") {
    // V = x^2 - 6x^2/(1+x^2)
    const auto p = RationalPotential::from_coeffs(1.0, 1, {0.0, 0.0, -6.0}, {1.0, 0.0, 1.0});
    const auto report = p.validate();
    CHECK(report.ok);
    CHECK(report.violations.empty());
}

TEST_CASE("validate rejects a denominator with real roots") {
    const auto p = RationalPotential::from_coeffs(1.0, 1, {0.0}, {1.0, 0.0, -1.0});
    const auto report = p.validate();
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.find("real root") != std::string::npos) found = true;
    }
    CHECK(found);
}

TEST_CASE("validate rejects the growth-condition boundary") {
    // m = 1, l = 1, k = 2m + 2l = 4: k - 2l = 2 = 2m
    const auto p = RationalPotential::from_coeffs(1.0, 1, {0.0, 0.0, 0.0, 0.0, 1.0},
                                                  {1.0, 0.0, 1.0});
    const auto report = p.validate();
    CHECK_FALSE(report.ok);
}

TEST_CASE("validate rejects q(0) != 1 and bad omega/m") {
    CHECK_FALSE(RationalPotential::from_coeffs(1.0, 1, {0.0}, {2.0, 0.0, 1.0}).validate().ok);
    CHECK_FALSE(RationalPotential::from_coeffs(-1.0, 1, {0.0}, {1.0}).validate().ok);
    CHECK_FALSE(RationalPotential::from_coeffs(1.0, 0, {0.0}, {1.0}).validate().ok);
}

TEST_CASE("evaluate") {
    const auto p = RationalPotential::from_coeffs(1.0, 1, {0.0, 0.0, -6.0}, {1.0, 0.0, 1.0});
    CHECK(p.evaluate(1.0) == doctest::Approx(-2.0));
    CHECK(p.evaluate(0.0) == doctest::Approx(0.0));  // lambda_0

    const auto p2 = RationalPotential::from_coeffs(1.0, 2, {0.0, 1.0}, {1.0, 0.0, 1.0});
    CHECK(p2.evaluate(2.0) == doctest::Approx(16.4));
}

TEST_CASE("singularities of 1 + g x^2") {
    const auto p1 = RationalPotential::from_coeffs(1.0, 1, {0.0}, {1.0, 0.0, 1.0});
    auto s1 = p1.singularities();
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].delta == doctest::Approx(0.0));
    CHECK(s1[0].eps == doctest::Approx(1.0));

    const auto p4 = RationalPotential::from_coeffs(1.0, 1, {0.0}, {1.0, 0.0, 4.0});
    auto s4 = p4.singularities();
    REQUIRE(s4.size() == 1);
    CHECK(s4[0].eps == doctest::Approx(0.5));
}

TEST_CASE("singularities round trip through root pairs") {
    const auto p = RationalPotential::from_roots(1.0, 2, {0.0},
                                                 {Complex(1.0, 1.0), Complex(-1.0, 2.0)});
    auto s = p.singularities();
    REQUIRE(s.size() == 2);
    // sorted ascending by delta
    CHECK(s[0].delta == doctest::Approx(-1.0));
    CHECK(s[0].eps == doctest::Approx(2.0));
    CHECK(s[1].delta == doctest::Approx(1.0));
    CHECK(s[1].eps == doctest::Approx(1.0));
    CHECK(p.l() == 2);
}

TEST_CASE("random_potential is deterministic") {
    const auto a = descm::random_potential(1, 1, 1234);
    const auto b = descm::random_potential(1, 1, 1234);
    CHECK(a.omega() == b.omega());
    CHECK(a.numerator() == b.numerator());
    CHECK(a.q_coeffs() == b.q_coeffs());
}

TEST_CASE("random_potential k support for m = 1, l = 1") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = descm::random_potential(1, 1, seed);
        CHECK(p.numerator().size() >= 1);
        CHECK(p.numerator().size() <= 4);  // k in {0,1,2,3}
    }
}

TEST_CASE("random_potential draws all pass validate") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto p = descm::random_potential(2, 2, seed);
        CHECK(p.validate().ok);
    }
}

TEST_CASE("random_potential respects the stated supports") {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const auto p = descm::random_potential(1, 1, seed);
        CHECK(p.omega() > 0.0);
        CHECK(p.omega() < 10.0);
        for (double c : p.numerator()) {
            CHECK(std::abs(c) <= 10.0);
        }
        REQUIRE(p.q_roots().size() == 1);
        CHECK(std::abs(p.q_roots()[0].real()) <= 5.0);
        CHECK(p.q_roots()[0].imag() >= 1e-3);
        CHECK(p.q_roots()[0].imag() <= 10.0);
    }
}

TEST_CASE("property: p/q is o(x^{2m}) on a large grid") {
    const auto p = descm::random_potential(2, 2, 31);
    double prev_ratio = 1e300;
    for (double x : {1e2, 1e3, 1e4}) {
        const double rational = p.evaluate(x) - p.omega() * std::pow(x, 2 * p.m());
        const double ratio = std::abs(rational) / std::pow(x, 2 * p.m());
        CHECK((ratio < prev_ratio || ratio == 0.0));  // may underflow to 0
        prev_ratio = ratio;
    }
    CHECK(prev_ratio < 1e-6);
}
