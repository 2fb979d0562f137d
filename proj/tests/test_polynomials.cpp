#include "mlqm/multipoly.hpp"

#include "doctest.h"

namespace {

using mlqm::GaussianRational;
using mlqm::MultiPoly;
using mlqm::Rational;

struct Ring {
    mlqm::SymbolTablePtr table = mlqm::make_table({"x", "y"}, 2);
    MultiPoly x = MultiPoly::symbol(table, 0);
    MultiPoly y = MultiPoly::symbol(table, 1);
    MultiPoly one = MultiPoly::constant(table, GaussianRational(1));
};

} // namespace

TEST_SUITE("polynomials") {

TEST_CASE("binomial square has the expected normal form") {
    Ring r;
    const MultiPoly p = (r.x + r.y) * (r.x + r.y);
    CHECK(p == r.x * r.x + GaussianRational(2) * r.x * r.y + r.y * r.y);
    CHECK(p.term_count() == 3);
    CHECK(p.total_degree() == 2);
    CHECK(p.degree(0) == 2);
    CHECK(p.str() == "x^2 + 2*x*y + y^2");
}

TEST_CASE("printing is deterministic with the leading monomial first") {
    Ring r;
    const MultiPoly p = r.y * r.y - r.x + r.one;
    CHECK(p.str() == (r.one - r.x + r.y * r.y).str());
    CHECK(MultiPoly::symbol(r.table, 0).str() == "x");
}

TEST_CASE("differentiation and evaluation are exact") {
    Ring r;
    const MultiPoly p = r.x.pow(3) * r.y;
    CHECK(p.differentiate(0) == GaussianRational(3) * r.x.pow(2) * r.y);
    CHECK(p.differentiate(1) == r.x.pow(3));
    CHECK(p.evaluate({Rational(2), Rational(3)}) == GaussianRational(24));
    CHECK(p.evaluate_double({0.5, 0.25}) == doctest::Approx(0.03125).epsilon(1e-15));
}

TEST_CASE("substitution and truncation") {
    Ring r;
    const MultiPoly p = r.x.pow(3) * r.y + r.x + r.one;
    CHECK(p.substitute(1, GaussianRational(2)) == GaussianRational(2) * r.x.pow(3) + r.x + r.one);
    CHECK((r.x.pow(2) + r.x + r.one).truncate_above(0, 1) == r.x + r.one);
    CHECK(p.truncate_above(0, 0) == r.one);
}

TEST_CASE("exact division succeeds exactly when the divisor divides") {
    Ring r;
    const MultiPoly p = r.x * r.x - r.y * r.y;
    const auto q = p.divide_exact(r.x - r.y);
    REQUIRE(q.has_value());
    CHECK(*q == r.x + r.y);
    CHECK(!(r.x * r.x + r.y).divide_exact(r.x - r.y).has_value());
}

TEST_CASE("coefficient conjugation flips i") {
    Ring r;
    const MultiPoly p = r.x * GaussianRational::i() + r.one;
    CHECK(p.conj() == r.one - r.x * GaussianRational::i());
    CHECK(p.conj().conj() == p);
}

TEST_CASE("powers and cancellation") {
    Ring r;
    const MultiPoly p = (r.x + r.one).pow(3);
    CHECK(p.term_count() == 4);
    CHECK(p.evaluate({Rational(1), Rational(0)}) == GaussianRational(8));
    CHECK((r.x + r.one).pow(0) == r.one);
    CHECK((p - p).is_zero());

    MultiPoly q(r.table);
    q.add_term({1, 0}, GaussianRational(1));
    q.add_term({1, 0}, GaussianRational(-1));
    CHECK(q.is_zero());
}

TEST_CASE("constant detection") {
    Ring r;
    CHECK(r.one.is_constant());
    CHECK(r.one.constant_value() == GaussianRational(1));
    CHECK(!r.x.is_constant());
    CHECK(MultiPoly(r.table).is_zero());
}

} // TEST_SUITE
