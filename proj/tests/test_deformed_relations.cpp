#include "mlqm/deformed_algebra.hpp"

#include "doctest.h"

namespace {

using mlqm::AlgebraFamily;
using mlqm::DeformationParams;
using mlqm::DiffOp;
using mlqm::GaussianRational;
using mlqm::MultiPoly;
using mlqm::Rational;
using mlqm::RationalFn;

void require_all_ok(const mlqm::VerificationReport& rep) {
    for (const auto& r : rep.relations) {
        INFO(rep.subject, ": ", r.relation);
        CHECK(r.ok);
        CHECK(r.residualTerms == 0);
    }
    CHECK(rep.all_ok());
    CHECK(!rep.relations.empty());
}

} // namespace

TEST_SUITE("deformed_relations") {

TEST_CASE("formal parameters close the commutator set in every dimension") {
    const auto params = DeformationParams::symbolic();
    for (int d = 1; d <= 3; ++d) {
        require_all_ok(mlqm::verify_deformed_algebra(mlqm::build_covariant_operators(params, d)));
        require_all_ok(mlqm::verify_deformed_algebra(mlqm::build_kempf_operators(params, d)));
    }
}

TEST_CASE("exact rational parameters close the commutator set") {
    const auto params =
        DeformationParams::exact(Rational(1) / 10, Rational(1) / 20, Rational(1) / 7);
    require_all_ok(mlqm::verify_deformed_algebra(mlqm::build_covariant_operators(params, 2)));
    const auto tiny = DeformationParams::exact(Rational("3/1000"), Rational("7/500"),
                                               Rational("1/9"));
    require_all_ok(mlqm::verify_deformed_algebra(mlqm::build_covariant_operators(tiny, 1)));
}

TEST_CASE("negative deformation parameters are rejected") {
    CHECK_THROWS_AS(DeformationParams::exact(Rational(-1) / 10, Rational(0), Rational(0)),
                    mlqm::NonPhysicalConfigError);
}

TEST_CASE("dimensionless realization on a line has the closed form i u d + i gamma p") {
    const auto fam = mlqm::build_covariant_operators(
        DeformationParams::exact(Rational(1) / 5, Rational(0), Rational(1) / 7), 1, true);
    const auto& ctx = fam.ctx;
    const MultiPoly p1 = MultiPoly::symbol(ctx->table, fam.momentum(1));
    const GaussianRational i = GaussianRational::i();

    DiffOp expected = DiffOp::mul(ctx, fam.gamma_poly() * p1 * i);
    expected.add_term(mlqm::ExpVec{0, 1}, RationalFn(ctx, ctx->bases.at(0) * i));
    CHECK(fam.X(1) == expected);
    CHECK(fam.P(1) == DiffOp::mul(ctx, p1));
}

TEST_CASE("restricting the covariant family to zero energy gives the spatial family") {
    const auto params = DeformationParams::exact(Rational(1) / 10, Rational(1) / 20, Rational(0));
    const auto cov = mlqm::build_covariant_operators(params, 2);
    const auto restricted = mlqm::restrict_to_spatial(cov);
    const auto spatial = mlqm::build_kempf_operators(params, 2, false, cov.ctx->table);
    REQUIRE(restricted.family == AlgebraFamily::euclidean);
    for (std::size_t i = 1; i <= 2; ++i) {
        CHECK(restricted.X(i) == spatial.X(i));
        CHECK(restricted.P(i) == spatial.P(i));
    }
}

TEST_CASE("operator indices are range checked") {
    const auto fam = mlqm::build_covariant_operators(DeformationParams::symbolic(), 2);
    CHECK_THROWS_AS(fam.X(5), mlqm::BadIndicesError);
    const auto kempf = mlqm::build_kempf_operators(DeformationParams::symbolic(), 2);
    CHECK_THROWS_AS(kempf.X(0), mlqm::BadIndicesError);
}

TEST_CASE("scalar-product weight exponents are exact rationals") {
    using mlqm::weight_exponent;
    const Rational z(0);
    CHECK(weight_exponent(z, Rational(1), z, 3, AlgebraFamily::covariant).alpha ==
          Rational(5) / 2);
    CHECK(weight_exponent(z, Rational(1), z, 3, AlgebraFamily::euclidean).alpha == Rational(2));
    CHECK(weight_exponent(Rational(1) / 10, z, z, 1, AlgebraFamily::covariant).alpha ==
          Rational(1));
    // Equal beta and gamma cancel in the numerator for a pure-beta family.
    CHECK(weight_exponent(Rational(1) / 10, z, Rational(1) / 10, 1,
                          AlgebraFamily::covariant).alpha == Rational(0));

    // The two families differ by exactly beta' / (2 (beta + beta')).
    const Rational beta = Rational(1) / 10, betaPrime = Rational(1) / 5;
    const auto cov = weight_exponent(beta, betaPrime, z, 2, AlgebraFamily::covariant);
    const auto euc = weight_exponent(beta, betaPrime, z, 2, AlgebraFamily::euclidean);
    CHECK(cov.alpha - euc.alpha == betaPrime / (2 * (beta + betaPrime)));

    CHECK_THROWS_AS(weight_exponent(z, z, Rational(1), 3, AlgebraFamily::covariant),
                    mlqm::DegenerateWeightError);
}

TEST_CASE("sharp-energy band") {
    CHECK(mlqm::physical_state_check(0.3, 1.0));
    CHECK(!mlqm::physical_state_check(0.3, 2.0));
    CHECK(mlqm::physical_state_check(0.0, 100.0));
}

TEST_CASE("parity and time reversal preserve the relations") {
    const auto params = DeformationParams::symbolic();
    const auto cov = mlqm::build_covariant_operators(params, 2);
    require_all_ok(mlqm::discrete_symmetry_check(cov, mlqm::DiscreteSymmetry::parity));
    require_all_ok(mlqm::discrete_symmetry_check(cov, mlqm::DiscreteSymmetry::time_reversal));

    const auto spatial = mlqm::build_kempf_operators(params, 2);
    require_all_ok(mlqm::discrete_symmetry_check(spatial, mlqm::DiscreteSymmetry::parity));
    // The spatial family carries no time direction to reverse.
    CHECK_THROWS_AS(mlqm::discrete_symmetry_check(spatial, mlqm::DiscreteSymmetry::time_reversal),
                    mlqm::Error);
}

TEST_CASE("momentum reflection is an involution on the operators") {
    const auto fam = mlqm::build_covariant_operators(DeformationParams::symbolic(), 1);
    CHECK(fam.X(1).reflect_momentum(fam.momentum(1)).reflect_momentum(fam.momentum(1)) ==
          fam.X(1));
}

} // TEST_SUITE
