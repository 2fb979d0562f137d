#include "mlqm/diff_op.hpp"

#include "doctest.h"

namespace {

using mlqm::DiffOp;
using mlqm::GaussianRational;
using mlqm::MultiPoly;
using mlqm::RationalFn;

struct Space {
    mlqm::SymbolTablePtr table = mlqm::make_table({"x", "b"}, 1);
    MultiPoly x = MultiPoly::symbol(table, 0);
    MultiPoly b = MultiPoly::symbol(table, 1);
    MultiPoly one = MultiPoly::constant(table, GaussianRational(1));
    MultiPoly u = one - b * x * x;
    mlqm::ContextPtr ctx = mlqm::make_context(table, {u});

    DiffOp D = DiffOp::derivative(ctx, 0);
    DiffOp M = DiffOp::mul(ctx, MultiPoly::symbol(table, 0));
    DiffOp A = DiffOp::mul(ctx, u).compose(DiffOp::derivative(ctx, 0)); // u d/dx
};

} // namespace

TEST_SUITE("operators") {

TEST_CASE("canonical commutator of derivative and coordinate") {
    Space s;
    CHECK(s.D.commutator(s.M) == DiffOp::identity(s.ctx));
    CHECK(s.D.compose(s.M) == s.M.compose(s.D) + DiffOp::identity(s.ctx));
    CHECK(s.M.commutator(s.M).is_zero());
}

TEST_CASE("composition is associative") {
    Space s;
    const DiffOp left = s.A.compose(s.M).compose(s.D.compose(s.D));
    const DiffOp right = s.A.compose(s.M.compose(s.D.compose(s.D)));
    CHECK(left == right);
}

TEST_CASE("jacobi identity holds exactly") {
    Space s;
    const DiffOp j = s.A.commutator(s.M.commutator(s.D)) +
                     s.M.commutator(s.D.commutator(s.A)) +
                     s.D.commutator(s.A.commutator(s.M));
    CHECK(j.is_zero());
}

TEST_CASE("action on scalar fields") {
    Space s;
    const DiffOp euler = s.M.compose(s.D); // x d/dx
    CHECK(euler.apply(s.x.pow(3)) == RationalFn(s.ctx, GaussianRational(3) * s.x.pow(3)));
    // d/dx (1/u) = 2 b x / u^2.
    CHECK(s.D.apply(RationalFn(s.ctx, s.one, {1})) ==
          RationalFn(s.ctx, GaussianRational(2) * s.b * s.x, {2}));
}

TEST_CASE("coefficient conjugation is an involution") {
    Space s;
    const DiffOp op = DiffOp::mul(s.ctx, s.x * GaussianRational::i());
    CHECK(op.conj() == -op);
    CHECK(s.A.conj() == s.A);
    CHECK(op.conj().conj() == op);
}

TEST_CASE("momentum reflection flips odd pieces only") {
    Space s;
    CHECK(s.D.reflect_momentum(0) == -s.D);
    CHECK(s.M.compose(s.D).reflect_momentum(0) == s.M.compose(s.D));
    CHECK(s.A.reflect_momentum(0).reflect_momentum(0) == s.A);
}

TEST_CASE("normalization is idempotent and cancellation prunes terms") {
    Space s;
    const DiffOp op = s.A.compose(s.A);
    CHECK(op.normalized() == op);
    CHECK((op - op).is_zero());
    CHECK((op - op).term_count() == 0);

    DiffOp built(s.ctx);
    built.add_term({1}, RationalFn(s.ctx, s.x));
    built.add_term({1}, -RationalFn(s.ctx, s.x));
    CHECK(built.is_zero());
}

TEST_CASE("scalar scaling matches repeated addition") {
    Space s;
    CHECK(s.A.scaled(GaussianRational(2)) == s.A + s.A);
    CHECK(s.A.scaled(RationalFn(s.ctx, s.x)) == DiffOp::mul(s.ctx, s.x).compose(s.A));
}

TEST_CASE("parameter substitution and truncation act on coefficients") {
    Space s;
    CHECK(DiffOp::mul(s.ctx, s.u).substitute(1, GaussianRational(0)) ==
          DiffOp::identity(s.ctx));
    CHECK(DiffOp::mul(s.ctx, s.u).truncate_above(1, 0) == DiffOp::identity(s.ctx));
}

TEST_CASE("denominator-free operators can move to another context") {
    Space s;
    const auto bare = mlqm::make_context(s.table, {});
    const DiffOp moved = s.A.with_context(bare);
    CHECK(moved.context() == bare);
    CHECK(moved.term_count() == s.A.term_count());
    CHECK(moved.with_context(s.ctx) == s.A);
}

TEST_CASE("term bookkeeping sizes") {
    Space s;
    CHECK(s.A.term_count() == 1);
    CHECK(s.A.residual_term_count() == 2); // coefficient u has two monomials
    CHECK(!s.A.str().empty());
}

} // TEST_SUITE
