#include "mlqm/quadrature.hpp"

#include "doctest.h"

#include <cmath>

using mlqm::integrate;
using mlqm::integrate_real_line;
using mlqm::QuadratureSpec;

TEST_SUITE("quadrature") {

TEST_CASE("polynomial and trigonometric references") {
    CHECK(integrate([](double x) { return x * x; }, 0, 1).value ==
          doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0, M_PI).value ==
          doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("orientation and degenerate interval") {
    const double forward = integrate([](double x) { return std::exp(x); }, 0, 1).value;
    const double backward = integrate([](double x) { return std::exp(x); }, 1, 0).value;
    CHECK(forward == doctest::Approx(-backward).epsilon(1e-15));
    CHECK(integrate([](double x) { return std::exp(x); }, 2, 2).value == 0.0);
}

TEST_CASE("whole-line transform handles light and heavy tails") {
    CHECK(integrate_real_line([](double x) { return std::exp(-x * x); }, 1.0).value ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(integrate_real_line([](double x) { return 1.0 / (1.0 + x * x); }, 1.0).value ==
          doctest::Approx(M_PI).epsilon(1e-12));
    // Lorentzian with two scales: Integral dp / (A + b p^2) = pi / sqrt(A b).
    const double A = 0.7, b = 0.3;
    CHECK(integrate_real_line([&](double p) { return 1.0 / (A + b * p * p); },
                              std::sqrt(A / b)).value ==
          doctest::Approx(M_PI / std::sqrt(A * b)).epsilon(1e-12));
}

TEST_CASE("an exactly odd integrand converges to zero instead of exhausting the budget") {
    const auto res = integrate_real_line([](double x) { return x * std::exp(-x * x); }, 1.0);
    CHECK(std::abs(res.value) <= 1e-15);
}

TEST_CASE("the interval budget turns non-convergence into an exception") {
    QuadratureSpec tight;
    tight.maxIntervals = 4;
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, tight),
                    mlqm::NoConvergenceError);
}

TEST_CASE("error estimate and interval count are reported") {
    const auto res = integrate([](double x) { return std::cos(x); }, 0, 1);
    CHECK(res.errorEstimate <= 1e-10);
    CHECK(res.intervals >= 1);
    CHECK(res.value == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
}

TEST_CASE("results are reproducible bit for bit") {
    auto f = [](double x) { return std::exp(-x * x) * std::cos(3 * x); };
    const double a = integrate_real_line(f, 1.0).value;
    const double b = integrate_real_line(f, 1.0).value;
    CHECK(a == b);
}

TEST_CASE("compensated summation keeps small addends") {
    mlqm::NeumaierSum sum;
    sum.add(1e16);
    sum.add(1.0);
    sum.add(-1e16);
    CHECK(sum.value() == 1.0);
}

} // TEST_SUITE
