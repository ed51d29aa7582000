#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "descm/discretize.hpp"
#include "descm/sinc.hpp"

using descm::sinc;
using descm::sinc_basis;

namespace {

// 5-point central second derivative
double second_derivative(double (*f)(int, double, double), int j, double h, double x,
                         double s) {
    return (-f(j, h, x - 2 * s) + 16.0 * f(j, h, x - s) - 30.0 * f(j, h, x)
            + 16.0 * f(j, h, x + s) - f(j, h, x + 2 * s)) / (12.0 * s * s);
}

} // namespace

TEST_CASE("sinc point values") {
    CHECK(sinc(0.0) == doctest::Approx(1.0));
    CHECK(sinc(1.0) == doctest::Approx(0.0));
    CHECK(sinc(0.5) == doctest::Approx(2.0 / std::numbers::pi));
}

TEST_CASE("sinc is continuous through the series branch") {
    const double just_below = sinc(0.99999e-4);
    const double just_above = sinc(1.00001e-4);
    CHECK(std::abs(just_below - just_above) < 1e-12);
}

TEST_CASE("sinc_basis point values") {
    CHECK(sinc_basis(3, 0.5, 1.5) == doctest::Approx(1.0));
    CHECK(sinc_basis(0, 1.0, 4.0) == doctest::Approx(0.0));
    CHECK(sinc_basis(0, 1.0, 0.5) == doctest::Approx(2.0 / std::numbers::pi));
}

TEST_CASE("discrete orthogonality") {
    const double h = 0.3;
    for (int j = -50; j <= 50; j += 7) {
        for (int k = -50; k <= 50; k += 7) {
            const double v = sinc_basis(j, h, k * h);
            if (j == k) {
                CHECK(v == doctest::Approx(1.0));
            } else {
                CHECK(std::abs(v) < 1e-14);
            }
        }
    }
}

TEST_CASE("delta2 stencil against the finite-difference definition") {
    const auto t = descm::delta2_stencil(20);
    CHECK(t.first_row[0] == doctest::Approx(-std::numbers::pi * std::numbers::pi / 3.0));
    CHECK(t.first_row[1] == doctest::Approx(2.0));
    CHECK(t.first_row[2] == doctest::Approx(-0.5));

    const double h = 1.0;
    for (int r = 0; r <= 20; ++r) {
        const double fd = h * h * second_derivative(sinc_basis, 0, h, r * h, 1e-2);
        CHECK(std::abs(fd - t.first_row[r]) < 1e-6);
    }
}

TEST_CASE("stencil entries are independent of h") {
    // h^2 S(j,h)''(kh) must agree between two mesh sizes
    for (double h : {0.5, 2.0}) {
        for (int r = 0; r <= 5; ++r) {
            const double fd = h * h * second_derivative(sinc_basis, 0, h, r * h, 1e-2 * h);
            CHECK(std::abs(fd - descm::delta2_stencil(5).first_row[r]) < 1e-6);
        }
    }
}

TEST_CASE("trapezoidal identity for the Gaussian under a sinh map") {
    // integral of exp(-x^2) over the line is sqrt(pi); with x = sinh(t) the
    // summand exp(-sinh^2 t) cosh(t) decays like exp(-exp(2|t|)/4)
    const int N = 30;
    const double gamma = 2.0;
    const double B = 0.25;
    const double d = std::numbers::pi / 4.0;
    const double h = descm::mesh_size(N, gamma, B, d);
    double sum = 0.0;
    for (int j = -N; j <= N; ++j) {
        const double t = j * h;
        sum += std::exp(-std::sinh(t) * std::sinh(t)) * std::cosh(t);
    }
    CHECK(std::abs(h * sum - std::sqrt(std::numbers::pi)) < 1e-12);
}
