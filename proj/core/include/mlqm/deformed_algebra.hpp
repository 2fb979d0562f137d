#pragma once

// Position/momentum operator families with a minimal-length deformation, in
// momentum representation, over signature (+, -, ..., -):
//
//   covariant family:  X^mu = (1 - beta p.p) x^mu - beta' p^mu (p.x) + i hbar gamma p^mu
//   Euclidean family:  X^i  = (1 + beta p^2) x^i  + beta' p^i  (p.x) + i hbar gamma p^i
//
// with P^mu = p^mu and x^mu = -i hbar g^{mu nu} d/dp^nu. The verifier forms
// the commutators exactly and subtracts the closed-form right-hand sides; a
// relation passes only when the residual operator is identically zero.

#include "mlqm/diff_op.hpp"
#include "mlqm/errors.hpp"
#include "mlqm/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mlqm {

enum class AlgebraFamily { covariant, euclidean };

// A deformation parameter is either the formal symbol or an exact rational.
struct ParamSpec {
    bool formal = true;
    Rational value{0};

    static ParamSpec symbolic() { return {}; }
    static ParamSpec exact(Rational v) { return {false, std::move(v)}; }
};

struct DeformationParams {
    ParamSpec beta;
    ParamSpec betaPrime;
    ParamSpec gamma;

    static DeformationParams symbolic() { return {}; }
    static DeformationParams exact(Rational b, Rational bp, Rational g);
};

// diag(+1, -1, ..., -1); index 0 is the time-like direction.
struct Metric {
    int spatialDim;
    int diag(std::size_t mu) const { return mu == 0 ? +1 : -1; }
};

// Symbol layout used by every algebra context: momenta p0..pD first, then
// beta, betaPrime, gamma, hbar and the nilpotent bookkeeping symbol dw.
SymbolTablePtr make_algebra_table(int spatialDim);

struct OperatorFamily {
    AlgebraFamily family = AlgebraFamily::covariant;
    int spatialDim = 1;
    bool dimensionless = false; // hbar fixed to 1 instead of the hbar symbol
    DeformationParams params;
    ContextPtr ctx; // single base: 1 - beta p.p (covariant) or 1 + beta p^2

    const DiffOp& X(std::size_t mu) const;
    const DiffOp& P(std::size_t mu) const;

    // 0 for the Euclidean family (indices run 1..D there), else also 0.
    std::size_t first_index() const { return family == AlgebraFamily::euclidean ? 1 : 0; }
    std::size_t index_count() const { return static_cast<std::size_t>(spatialDim) + 1; }

    Metric metric() const { return {spatialDim}; }

    // Symbol indices within the table.
    std::size_t momentum(std::size_t mu) const;
    std::size_t symBeta() const;
    std::size_t symBetaPrime() const;
    std::size_t symGamma() const;
    std::size_t symHbar() const;
    std::size_t symNil() const;

    // beta (etc.) as a polynomial: the symbol when formal, else the constant.
    MultiPoly beta_poly() const;
    MultiPoly beta_prime_poly() const;
    MultiPoly gamma_poly() const;
    MultiPoly hbar_poly() const;

    // p.p = (p0)^2 - sum_i (p_i)^2 for covariant, sum_i (p_i)^2 for Euclidean.
    MultiPoly momentum_square() const;

    std::vector<DiffOp> Xops;
    std::vector<DiffOp> Pops;
};

// Builders. An existing table may be passed so two families share symbols
// (required by the limit checks); it must come from make_algebra_table(D).
OperatorFamily build_covariant_operators(const DeformationParams& params, int spatialDim,
                                         bool dimensionless = false,
                                         SymbolTablePtr table = nullptr);
OperatorFamily build_kempf_operators(const DeformationParams& params, int spatialDim,
                                     bool dimensionless = false,
                                     SymbolTablePtr table = nullptr);

// Substitutes p0 = 0 into every coefficient of the covariant family and
// reinterprets the result over the Euclidean context. The output compares
// directly against build_kempf_operators on the same table.
OperatorFamily restrict_to_spatial(const OperatorFamily& covariant);

// Exact residuals of the full deformed commutator set. Every relation entry
// must come back ok for a faithful realization.
VerificationReport verify_deformed_algebra(const OperatorFamily& fam);

enum class DiscreteSymmetry { parity, time_reversal };

// Checks (a) that momentum reflection (plus conjugation for time reversal)
// maps each operator to its expected signed partner, and (b) that the
// sign-substituted commutator relations still close exactly.
VerificationReport discrete_symmetry_check(const OperatorFamily& fam, DiscreteSymmetry which);

// Weight exponent of the invariant scalar-product measure
//   d^D p / [1 - (beta+beta') p.p]^alpha.
// Exact rational in the parameters; beta + beta' = 0 has no such weight.
struct WeightSpec {
    Rational alpha;
    Rational betaPlusBetaPrime;
    AlgebraFamily family = AlgebraFamily::covariant;
    int spatialDim = 1;
};

WeightSpec weight_exponent(const Rational& beta, const Rational& betaPrime, const Rational& gamma,
                           int spatialDim, AlgebraFamily family);

// Physical band for sharp-energy states: (beta + beta') * (p0)^2 < 1.
bool physical_state_check(double betaPlusBetaPrime, double p0);

} // namespace mlqm
