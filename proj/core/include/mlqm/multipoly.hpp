#pragma once

// Sparse multivariate polynomials over the Gaussian rationals. Terms are kept
// in a map ordered by graded lexicographic monomial order, so every polynomial
// has exactly one normal form and printing is reproducible run to run.
// Coefficients are exact; a zero coefficient is never stored.

#include "mlqm/rational.hpp"
#include "mlqm/symbols.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mlqm {

using ExpVec = std::vector<std::uint32_t>;

// Graded lex: lower total degree first, ties broken lexicographically from
// symbol 0. std::map iteration therefore runs from the smallest monomial to
// the leading one.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(SymbolTablePtr table) : table_(std::move(table)) {}

    static MultiPoly constant(SymbolTablePtr table, GaussianRational c);
    static MultiPoly symbol(SymbolTablePtr table, std::size_t index, std::uint32_t power = 1);

    const SymbolTablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Constant term (zero if absent); meaningful mostly for is_constant() polys.
    GaussianRational constant_value() const;

    std::uint32_t degree(std::size_t symIndex) const;
    std::uint32_t total_degree() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const GaussianRational& c) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(std::uint32_t n) const;

    // Exact partial derivative with respect to any table symbol.
    MultiPoly differentiate(std::size_t symIndex) const;

    // Exact substitution of one symbol by a scalar.
    MultiPoly substitute(std::size_t symIndex, const GaussianRational& value) const;

    // Drops every term whose exponent in symIndex exceeds maxDegree. Used for
    // first-order (nilpotent-parameter) expansions.
    MultiPoly truncate_above(std::size_t symIndex, std::uint32_t maxDegree) const;

    // Conjugates every coefficient (i -> -i).
    MultiPoly conj() const;

    // Exact evaluation at a rational point (one value per table symbol).
    GaussianRational evaluate(const std::vector<Rational>& point) const;

    // Floating evaluation for the numeric boundary.
    double evaluate_double(const std::vector<double>& point) const;

    // Quotient if divisor divides this exactly, std::nullopt otherwise.
    // Multivariate long division by a single divisor under graded lex.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    // Canonical text form, leading monomial first: "2*p0^2*beta - i*hbar".
    std::string str() const;

    const std::map<ExpVec, GaussianRational, GradedLexLess>& terms() const { return terms_; }

    void add_term(const ExpVec& exps, const GaussianRational& c);

private:
    void check_same_table(const MultiPoly& o) const;

    SymbolTablePtr table_;
    std::map<ExpVec, GaussianRational, GradedLexLess> terms_;
};

inline MultiPoly operator*(const GaussianRational& c, const MultiPoly& p) { return p * c; }

} // namespace mlqm
