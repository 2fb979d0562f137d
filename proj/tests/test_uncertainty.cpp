#include "mlqm/uncertainty.hpp"

#include "doctest.h"

#include <cmath>

using mlqm::build_wavefunctions;
using mlqm::make_config;
using mlqm::oscillator_moments;

TEST_SUITE("uncertainty") {

TEST_CASE("ground-state moments saturate the bound exactly") {
    const auto cfg = make_config(0.2, 0.5);
    const auto w = build_wavefunctions(cfg, 0, +1);
    const auto m = oscillator_moments(w);
    const double lambda = 10.0, K = w.K;
    CHECK(m.norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(m.meanP) <= 1e-13);
    CHECK(std::abs(m.firstMomentResidual) <= 1e-12);
    CHECK(m.meanPP == doctest::Approx(K / (0.2 * (2 * lambda - 1))).epsilon(1e-12));
    CHECK(m.meanXX ==
          doctest::Approx(lambda * lambda * 0.2 * K / (2 * lambda - 1)).epsilon(1e-12));

    const auto ineq = mlqm::position_momentum_inequality(m, 0.2);
    CHECK(ineq.lhs == doctest::Approx(ineq.rhs).epsilon(1e-12));
    CHECK(std::abs(ineq.margin) <= 1e-12);
}

TEST_CASE("excited states satisfy the bound with a finite margin") {
    const auto cfg = make_config(0.2, 0.5);
    const auto m = oscillator_moments(build_wavefunctions(cfg, 4, +1));
    const auto ineq = mlqm::position_momentum_inequality(m, 0.2);
    CHECK(ineq.satisfied);
    CHECK(ineq.margin > 1.5);
    CHECK(m.deltaP == doctest::Approx(std::sqrt(m.meanPP - m.meanP * m.meanP)).epsilon(1e-13));
    CHECK(m.deltaX == doctest::Approx(std::sqrt(m.meanXX)).epsilon(1e-13));
}

TEST_CASE("moment integrals demand an integrable endpoint exponent") {
    const auto cfg = make_config(0.9, 2.5); // lambda = 1/2.25 < 1/2
    CHECK_THROWS_AS(oscillator_moments(build_wavefunctions(cfg, 0, +1)),
                    mlqm::NonPhysicalConfigError);
}

TEST_CASE("minimal position spread closed forms") {
    CHECK(mlqm::minimal_deltaX(3, 0.1, 0.05, 2.0, 0.0, 0.0) ==
          doctest::Approx(std::sqrt(0.28)).epsilon(1e-15));
    CHECK(mlqm::absolute_minimal_deltaX(3, 0.1, 0.05, 0.0) ==
          doctest::Approx(std::sqrt(0.35)).epsilon(1e-15));
    CHECK(mlqm::absolute_minimal_deltaX(3, 0.1, 0.05, 2.0) ==
          doctest::Approx(mlqm::minimal_deltaX(3, 0.1, 0.05, 2.0, 0.0, 0.0)).epsilon(1e-15));
    CHECK(mlqm::absolute_minimal_deltaX(1, 0.0, 0.49, 0.0) ==
          doctest::Approx(0.7).epsilon(1e-15));
    CHECK_THROWS_AS(mlqm::minimal_deltaX(3, 0.5, 0.0, 3.0, 0.0, 0.0),
                    mlqm::NonPhysicalConfigError);
}

TEST_CASE("weighted symmetry defect vanishes exactly when tuned") {
    mlqm::HermiticityProbe probe; // bt = 1/4, lambda = 2, p0 = 1, states 1 and 2

    probe.alpha = 0.0;
    probe.gammaTilde = 0.0;
    const auto flat = mlqm::position_hermiticity(probe);
    CHECK(flat.scale > 0);
    CHECK(flat.defect == doctest::Approx(-36.9777777777778).epsilon(1e-9));
    CHECK(flat.defect == doctest::Approx(flat.closedForm).epsilon(1e-10));

    probe.gammaTilde = 0.25; // equals (1 - alpha) bt: the compensated point
    const auto tunedGamma = mlqm::position_hermiticity(probe);
    CHECK(std::abs(tunedGamma.defect) <= 1e-10 * tunedGamma.scale);

    probe.alpha = 1.0;
    probe.gammaTilde = 0.0; // also compensated: (1 - alpha) bt = 0
    const auto tunedAlpha = mlqm::position_hermiticity(probe);
    CHECK(std::abs(tunedAlpha.defect) <= 1e-10 * tunedAlpha.scale);

    probe.gammaTilde = 0.25; // now detuned by the full gamma
    const auto detuned = mlqm::position_hermiticity(probe);
    CHECK(std::abs(detuned.defect) > 1e-3 * detuned.scale);
    CHECK(detuned.defect == doctest::Approx(detuned.closedForm).epsilon(1e-9));
}

TEST_CASE("probe validation") {
    mlqm::HermiticityProbe probe;
    probe.lambda = 0.9;  // alpha + lambda <= 1 has no convergent defect integral
    probe.alpha = 0.0;
    CHECK_THROWS_AS(mlqm::position_hermiticity(probe), mlqm::NonPhysicalConfigError);
    probe = {};
    probe.p0 = 2.1; // K = 1 - bt p0^2 < 0
    CHECK_THROWS_AS(mlqm::position_hermiticity(probe), mlqm::NonPhysicalConfigError);
}

} // TEST_SUITE
