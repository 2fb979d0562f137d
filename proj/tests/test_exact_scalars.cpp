#include "mlqm/rational.hpp"

#include "doctest.h"

#include <stdexcept>

using mlqm::GaussianRational;
using mlqm::Rational;

TEST_SUITE("exact_scalars") {

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(3) / 4 + Rational(5) / 6 == Rational(19) / 12);
    CHECK(Rational("3/10") == Rational(3) / 10);
    CHECK(mlqm::to_string(Rational(3) / 10) == "3/10");
    CHECK(mlqm::to_string(Rational(-7)) == "-7");
    CHECK(mlqm::to_double(Rational(1) / 8) == 0.125);
}

TEST_CASE("gaussian rationals form a field") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((GaussianRational(2) + GaussianRational(3) * i) *
              (GaussianRational(2) - GaussianRational(3) * i) ==
          GaussianRational(13));

    const GaussianRational a(Rational(3) / 7, Rational(-2) / 5);
    const GaussianRational b(Rational(1) / 2, Rational(4));
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == GaussianRational(a.re() * a.re() + a.im() * a.im()));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
}

TEST_CASE("canonical text forms") {
    CHECK(GaussianRational(0).str() == "0");
    CHECK(GaussianRational(Rational(3) / 2).str() == "3/2");
    CHECK(GaussianRational::i().str() == "i");
    CHECK((-GaussianRational::i()).str() == "-i");
    CHECK(GaussianRational(Rational(0), Rational(2) / 3).str() == "2i/3");
    CHECK(GaussianRational(Rational(1), Rational(1)).str() == "1+i");
    CHECK(GaussianRational(Rational(1), Rational(-2)).str() == "1-2i");
}

TEST_CASE("zero and reality predicates") {
    CHECK(GaussianRational().is_zero());
    CHECK(GaussianRational(Rational(5)).is_real());
    CHECK(!GaussianRational::i().is_real());
    CHECK(!GaussianRational(Rational(0), Rational(1)).is_zero());
}

} // TEST_SUITE
