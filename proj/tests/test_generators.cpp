#include "mlqm/poincare.hpp"

#include "doctest.h"

namespace {

using mlqm::DeformationParams;
using mlqm::Rational;

void require_all_ok(const mlqm::VerificationReport& rep) {
    for (const auto& r : rep.relations) {
        INFO(rep.subject, ": ", r.relation);
        CHECK(r.ok);
    }
    CHECK(rep.all_ok());
    CHECK(!rep.relations.empty());
}

} // namespace

TEST_SUITE("generators") {

TEST_CASE("corrected generators close for formal parameters") {
    const auto params = DeformationParams::symbolic();
    for (int d = 1; d <= 2; ++d) {
        const auto fam = mlqm::build_covariant_operators(params, d);
        require_all_ok(mlqm::verify_poincare_closure(fam));
        require_all_ok(mlqm::verify_generator_action(fam));
        require_all_ok(mlqm::verify_first_order_invariance(fam));
    }
}

TEST_CASE("the corrected boost collapses to the undeformed form") {
    const auto fam = mlqm::build_covariant_operators(DeformationParams::symbolic(), 2);
    CHECK(mlqm::build_lorentz(fam, 0, 1) == mlqm::undeformed_lorentz(fam, 0, 1));
    CHECK(mlqm::build_lorentz(fam, 0, 1) == -mlqm::build_lorentz(fam, 1, 0));
    CHECK(mlqm::build_lorentz(fam, 1, 1).is_zero());
}

TEST_CASE("corrected translations commute and evaluate exactly") {
    const auto fam = mlqm::build_covariant_operators(
        DeformationParams::exact(Rational(1) / 10, Rational(1) / 20, Rational(0)), 1);
    const auto t0 = mlqm::build_translation(fam, 0);
    const auto t1 = mlqm::build_translation(fam, 1);
    CHECK(t0.commutator(t1).is_zero());

    // At p = (1, 0) the base is 9/10, so the zeroth component acts as 10/9.
    const auto acted = t0.apply(mlqm::RationalFn::constant(fam.ctx, mlqm::GaussianRational(1)));
    const auto value = acted.evaluate(
        {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1),
         Rational(0)});
    CHECK(value == mlqm::GaussianRational(Rational(10) / 9));
}

TEST_CASE("generator indices and family kinds are validated") {
    const auto cov = mlqm::build_covariant_operators(DeformationParams::symbolic(), 1);
    CHECK_THROWS_AS(mlqm::build_lorentz(cov, 0, 5), mlqm::BadIndicesError);
    const auto kempf = mlqm::build_kempf_operators(DeformationParams::symbolic(), 1);
    CHECK_THROWS_AS(mlqm::build_lorentz(kempf, 0, 1), mlqm::Error);
}

TEST_CASE("two-particle translations shift the relative coordinate unless undeformed") {
    const auto formal = mlqm::two_particle_check(DeformationParams::symbolic());
    require_all_ok(formal.formula);
    CHECK(!formal.residualVanishes);
    CHECK(!formal.residualText.empty());

    const auto off = mlqm::two_particle_check(
        DeformationParams::exact(Rational(0), Rational(0), Rational(1) / 7));
    CHECK(off.formula.all_ok());
    CHECK(off.residualVanishes);
}

} // TEST_SUITE
