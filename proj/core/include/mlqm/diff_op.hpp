#pragma once

// Normal-ordered linear differential operators in momentum representation:
// finite sums  sum_a  c_a(p) * d^|a|/dp^a  with RationalFn coefficients and
// multi-index a running over the momentum symbols of the context. All
// coefficients stay to the left of all derivatives; composition rewrites into
// that form with the generalized Leibniz rule, exactly.

#include "mlqm/rational_fn.hpp"

#include <map>
#include <string>

namespace mlqm {

class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(ContextPtr ctx);

    static DiffOp identity(const ContextPtr& ctx);
    // Multiplication operator by a polynomial or rational function.
    static DiffOp mul(const ContextPtr& ctx, MultiPoly f);
    static DiffOp mul(RationalFn f);
    // d/dp_k for a momentum symbol k.
    static DiffOp derivative(const ContextPtr& ctx, std::size_t momentumIndex);

    const ContextPtr& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, RationalFn, GradedLexLess>& terms() const { return terms_; }

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }

    // Left multiplication by a scalar field: coefficients scale, order keeps.
    DiffOp scaled(const RationalFn& f) const;
    DiffOp scaled(const GaussianRational& c) const;

    // this ∘ o (apply o first). Exact; result is normal ordered.
    DiffOp compose(const DiffOp& o) const;

    DiffOp commutator(const DiffOp& o) const;

    // Action on a scalar field.
    RationalFn apply(const RationalFn& f) const;
    RationalFn apply(const MultiPoly& f) const;

    // Already maintained by every operation; calling it again is a no-op.
    // Exposed so idempotence is testable.
    DiffOp normalized() const;

    friend bool operator==(const DiffOp& a, const DiffOp& b);
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    DiffOp conj() const;

    // p_k -> -p_k in coefficients together with d/dp_k -> -d/dp_k.
    DiffOp reflect_momentum(std::size_t momentumIndex) const;

    DiffOp substitute(std::size_t symIndex, const GaussianRational& value) const;
    DiffOp truncate_above(std::size_t symIndex, std::uint32_t maxDegree) const;

    // Reinterprets the operator over another context on the same symbol
    // table. Requires denominator-free coefficients.
    DiffOp with_context(const ContextPtr& ctx) const;

    // Sum of term_count over coefficients; size measure for reports.
    std::size_t residual_term_count() const;

    std::string str() const;

    void add_term(const ExpVec& derivs, RationalFn coeff);

private:
    void check_same_context(const DiffOp& o) const;

    ContextPtr ctx_;
    std::map<ExpVec, RationalFn, GradedLexLess> terms_;
};

} // namespace mlqm
