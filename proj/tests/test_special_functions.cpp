#include "mlqm/special_functions.hpp"

#include "mlqm/dual.hpp"
#include "mlqm/errors.hpp"

#include "doctest.h"

#include <cmath>

using mlqm::Dual;
using mlqm::gegenbauer;

TEST_SUITE("special_functions") {

TEST_CASE("low orders match their closed forms") {
    CHECK(gegenbauer(0, 1.7, 0.3) == 1.0);
    CHECK(gegenbauer(1, 1.7, 0.3) == doctest::Approx(2 * 1.7 * 0.3).epsilon(1e-15));
    CHECK(gegenbauer(2, 1.0, 0.5) == doctest::Approx(0.0));
    // n = 3, lambda = 2: (4/3) l (l+1) (l+2) z^3 - 2 l (l+1) z.
    CHECK(gegenbauer(3, 2.0, 0.7) == doctest::Approx(32 * 0.343 - 12 * 0.7).epsilon(1e-14));
    CHECK(gegenbauer(-1, 2.0, 0.7) == 0.0);
    CHECK(gegenbauer(-5, 2.0, 0.7) == 0.0);
}

TEST_CASE("unit weight reduces to the second Chebyshev kind") {
    const double theta = 0.7;
    CHECK(gegenbauer(4, 1.0, std::cos(theta)) ==
          doctest::Approx(std::sin(5 * theta) / std::sin(theta)).epsilon(1e-13));
}

TEST_CASE("derivative identity against forward-mode differentiation") {
    // d/dz C_n^(l) = 2 l C_{n-1}^(l+1).
    const Dual c = gegenbauer(5, 1.5, Dual::variable(0.3));
    CHECK(c.d == doctest::Approx(2 * 1.5 * gegenbauer(4, 2.5, 0.3)).epsilon(1e-13));
    CHECK(c.v == doctest::Approx(gegenbauer(5, 1.5, 0.3)).epsilon(1e-15));
}

TEST_CASE("log-domain evaluation matches the direct recurrence") {
    const auto lg = mlqm::log_gegenbauer(10, 2.5, 0.6);
    CHECK(lg.value() == doctest::Approx(gegenbauer(10, 2.5, 0.6)).epsilon(1e-12));

    // Sign tracking across a root: C_2^(1)(z) = 4 z^2 - 1 flips at z = 1/2.
    CHECK(mlqm::log_gegenbauer(2, 1.0, 0.49).sign == -1);
    CHECK(mlqm::log_gegenbauer(2, 1.0, 0.51).sign == +1);

    // Inside (-1, 1) growth is only polynomial in n; the log path still
    // agrees at degrees far past any tabulated range.
    const auto deep = mlqm::log_gegenbauer(2000, 3.0, 0.9);
    CHECK(deep.value() == doctest::Approx(gegenbauer(2000, 3.0, 0.9)).epsilon(1e-9));

    // Large weight is where the direct recurrence overflows: C_200 at
    // lambda = 2000 sits near exp(774) while double tops out at exp(709.8).
    CHECK(!std::isfinite(gegenbauer(200, 2000.0, 0.9)));
    const auto big = mlqm::log_gegenbauer(200, 2000.0, 0.9);
    CHECK(std::isfinite(big.logAbs));
    CHECK(big.sign != 0);
    CHECK(big.logAbs > 710.0);
}

TEST_CASE("orthogonality norms match frozen closed-form values") {
    using mlqm::gegenbauer_norm;
    CHECK(gegenbauer_norm(0, 1.0) == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(gegenbauer_norm(3, 1.0) == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(gegenbauer_norm(0, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(gegenbauer_norm(0, 2.0) == doctest::Approx(3 * M_PI / 8).epsilon(1e-14));
    CHECK(gegenbauer_norm(2, 2.5) == doctest::Approx(80.0 / 9).epsilon(1e-13));
    // h_0(l-1) / h_0(l) telescopes to 2 l / (2 l - 1).
    CHECK(gegenbauer_norm(0, 9.0) / gegenbauer_norm(0, 10.0) ==
          doctest::Approx(20.0 / 19).epsilon(1e-12));
    CHECK(std::exp(mlqm::log_gegenbauer_norm(5, 3.5)) ==
          doctest::Approx(gegenbauer_norm(5, 3.5)).epsilon(1e-12));
}

TEST_CASE("compactified variable maps are mutually inverse") {
    const double K = 0.75, bt = 0.25;
    CHECK(mlqm::z_from_p(K, bt, std::sqrt(3.0)) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    for (double p : {-3.0, -0.4, 0.0, 1.7, 25.0}) {
        const double z = mlqm::z_from_p(K, bt, p);
        CHECK(std::abs(z) < 1.0);
        CHECK(mlqm::p_from_z(K, bt, z) == doctest::Approx(p).epsilon(1e-14));
    }
    CHECK_THROWS_AS(mlqm::p_from_z(K, bt, 1.0), mlqm::NonPhysicalConfigError);
    CHECK_THROWS_AS(mlqm::p_from_z(K, bt, -1.5), mlqm::NonPhysicalConfigError);
    CHECK_THROWS_AS(mlqm::z_from_p(0.0, bt, 1.0), mlqm::NonPhysicalConfigError);
}

} // TEST_SUITE
