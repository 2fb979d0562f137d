#pragma once

// Rational functions whose denominators are restricted to powers of the
// context's canonical base polynomials (for the deformed algebra that is
// 1 - beta*p.p; the two-particle setting carries one such base per particle).
// The restriction keeps normal forms unique and equality decidable by exact
// cross-multiplication, with no general gcd machinery.

#include "mlqm/multipoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mlqm {

struct AlgebraContext {
    SymbolTablePtr table;
    std::vector<MultiPoly> bases;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

ContextPtr make_context(SymbolTablePtr table, std::vector<MultiPoly> bases);

// Identical pointer, or same table with equal base lists. Separately built
// but structurally identical contexts interoperate.
bool contexts_compatible(const ContextPtr& a, const ContextPtr& b);

class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(ContextPtr ctx);
    RationalFn(ContextPtr ctx, MultiPoly numerator);
    RationalFn(ContextPtr ctx, MultiPoly numerator, std::vector<std::uint32_t> denPows);

    static RationalFn constant(const ContextPtr& ctx, const GaussianRational& c);
    static RationalFn symbol(const ContextPtr& ctx, std::size_t index, std::uint32_t power = 1);

    const ContextPtr& context() const { return ctx_; }
    const MultiPoly& numerator() const { return num_; }
    const std::vector<std::uint32_t>& den_pows() const { return denPows_; }
    std::uint32_t den_pow(std::size_t baseIndex = 0) const { return denPows_.at(baseIndex); }

    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator*(const GaussianRational& c) const;

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }

    // Exact equality of the represented functions (cross-multiplied).
    friend bool operator==(const RationalFn& a, const RationalFn& b);
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    // Appends base powers to the denominator.
    RationalFn over_base(std::size_t baseIndex, std::uint32_t power) const;

    // Quotient rule; closed because the bases are polynomials.
    RationalFn differentiate(std::size_t symIndex) const;

    // Cancels base factors out of the numerator wherever division is exact.
    // Idempotent; every arithmetic result is already reduced.
    RationalFn reduced() const;

    RationalFn conj() const;

    // Substitution is only allowed when no denominator is present or the
    // symbol does not occur in any active base (checked).
    RationalFn substitute(std::size_t symIndex, const GaussianRational& value) const;

    RationalFn truncate_above(std::size_t symIndex, std::uint32_t maxDegree) const;

    // p_k -> -p_k. Requires every active base to be even in that symbol,
    // which holds for all canonical bases here (they contain p_k^2 only).
    RationalFn negate_symbol(std::size_t symIndex) const;

    GaussianRational evaluate(const std::vector<Rational>& point) const;
    double evaluate_double(const std::vector<double>& point) const;

    std::string str() const;

private:
    void check_same_context(const RationalFn& o) const;
    MultiPoly denominator_poly() const;

    ContextPtr ctx_;
    MultiPoly num_;
    std::vector<std::uint32_t> denPows_;
};

inline RationalFn operator*(const GaussianRational& c, const RationalFn& f) { return f * c; }

} // namespace mlqm
