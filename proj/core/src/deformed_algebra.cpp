#include "mlqm/deformed_algebra.hpp"

#include <sstream>

namespace mlqm {

namespace {

ExpVec no_derivs(const ContextPtr& ctx) { return ExpVec(ctx->table->momentum_count(), 0); }

ExpVec single_deriv(const ContextPtr& ctx, std::size_t mu) {
    ExpVec d(ctx->table->momentum_count(), 0);
    d.at(mu) = 1;
    return d;
}

MultiPoly param_poly(const SymbolTablePtr& table, const ParamSpec& p, std::size_t symIndex) {
    if (p.formal) return MultiPoly::symbol(table, symIndex);
    return MultiPoly::constant(table, GaussianRational(p.value));
}

std::string idx_name(const char* op, std::size_t mu) {
    return std::string(op) + std::to_string(mu);
}

} // namespace

DeformationParams DeformationParams::exact(Rational b, Rational bp, Rational g) {
    if (b < 0) throw NonPhysicalConfigError("beta must be non-negative");
    if (bp < 0) throw NonPhysicalConfigError("betaPrime must be non-negative");
    DeformationParams p;
    p.beta = ParamSpec::exact(std::move(b));
    p.betaPrime = ParamSpec::exact(std::move(bp));
    p.gamma = ParamSpec::exact(std::move(g));
    return p;
}

SymbolTablePtr make_algebra_table(int spatialDim) {
    if (spatialDim < 1) throw NonPhysicalConfigError("spatial dimension must be >= 1");
    std::vector<std::string> names;
    for (int mu = 0; mu <= spatialDim; ++mu) names.push_back("p" + std::to_string(mu));
    names.insert(names.end(), {"beta", "betaPrime", "gamma", "hbar", "dw"});
    return make_table(std::move(names), static_cast<std::size_t>(spatialDim) + 1);
}

const DiffOp& OperatorFamily::X(std::size_t mu) const {
    if (mu >= index_count() || mu < first_index())
        throw BadIndicesError("X index " + std::to_string(mu) + " out of range");
    return Xops.at(mu);
}

const DiffOp& OperatorFamily::P(std::size_t mu) const {
    if (mu >= index_count() || mu < first_index())
        throw BadIndicesError("P index " + std::to_string(mu) + " out of range");
    return Pops.at(mu);
}

std::size_t OperatorFamily::momentum(std::size_t mu) const {
    if (mu >= index_count()) throw BadIndicesError("momentum index out of range");
    return mu;
}

std::size_t OperatorFamily::symBeta() const { return index_count(); }
std::size_t OperatorFamily::symBetaPrime() const { return index_count() + 1; }
std::size_t OperatorFamily::symGamma() const { return index_count() + 2; }
std::size_t OperatorFamily::symHbar() const { return index_count() + 3; }
std::size_t OperatorFamily::symNil() const { return index_count() + 4; }

MultiPoly OperatorFamily::beta_poly() const { return param_poly(ctx->table, params.beta, symBeta()); }
MultiPoly OperatorFamily::beta_prime_poly() const {
    return param_poly(ctx->table, params.betaPrime, symBetaPrime());
}
MultiPoly OperatorFamily::gamma_poly() const { return param_poly(ctx->table, params.gamma, symGamma()); }

MultiPoly OperatorFamily::hbar_poly() const {
    if (dimensionless) return MultiPoly::constant(ctx->table, GaussianRational(1));
    return MultiPoly::symbol(ctx->table, symHbar());
}

MultiPoly OperatorFamily::momentum_square() const {
    MultiPoly s(ctx->table);
    const Metric g = metric();
    for (std::size_t mu = first_index(); mu < index_count(); ++mu) {
        MultiPoly sq = MultiPoly::symbol(ctx->table, momentum(mu), 2);
        // Euclidean family: plain sum of squares; covariant: signature signs.
        int sign = family == AlgebraFamily::euclidean ? +1 : g.diag(mu);
        s += sign > 0 ? sq : -sq;
    }
    return s;
}

namespace {

OperatorFamily build_family(AlgebraFamily kind, const DeformationParams& params, int spatialDim,
                            bool dimensionless, SymbolTablePtr table) {
    if (!table) table = make_algebra_table(spatialDim);

    OperatorFamily fam;
    fam.family = kind;
    fam.spatialDim = spatialDim;
    fam.dimensionless = dimensionless;
    fam.params = params;

    // Temporary context just to build polynomials; the real one needs the base.
    const std::size_t D1 = static_cast<std::size_t>(spatialDim) + 1;
    MultiPoly one = MultiPoly::constant(table, GaussianRational(1));

    MultiPoly B = param_poly(table, params.beta, D1);
    MultiPoly Bp = param_poly(table, params.betaPrime, D1 + 1);
    MultiPoly G = param_poly(table, params.gamma, D1 + 2);
    MultiPoly hbar = dimensionless ? one : MultiPoly::symbol(table, D1 + 3);

    MultiPoly s(table);
    for (std::size_t mu = (kind == AlgebraFamily::euclidean ? 1 : 0); mu < D1; ++mu) {
        MultiPoly sq = MultiPoly::symbol(table, mu, 2);
        int sign = kind == AlgebraFamily::euclidean ? +1 : (mu == 0 ? +1 : -1);
        s += sign > 0 ? sq : -sq;
    }

    MultiPoly base = kind == AlgebraFamily::euclidean ? one + B * s : one - B * s;
    fam.ctx = make_context(table, {base});

    const GaussianRational ih = GaussianRational::i(); // multiplied by hbar below
    const std::size_t lo = kind == AlgebraFamily::euclidean ? 1 : 0;

    fam.Xops.assign(D1, DiffOp(fam.ctx));
    fam.Pops.assign(D1, DiffOp(fam.ctx));

    for (std::size_t mu = lo; mu < D1; ++mu) {
        MultiPoly pmu = MultiPoly::symbol(table, mu);
        int gmm = kind == AlgebraFamily::euclidean ? -1 : (mu == 0 ? +1 : -1);

        DiffOp X(fam.ctx);
        // (1 -+ beta s) x^mu with x^mu = -i hbar g^{mu mu} d/dp_mu.
        MultiPoly lead = base * hbar * GaussianRational(Rational(-gmm));
        X.add_term(single_deriv(fam.ctx, mu), RationalFn(fam.ctx, lead * ih));
        // -beta' p^mu p.x term; p_nu x^nu = -i hbar sum_rho p^rho d/dp_rho in
        // both signatures, so the contribution is +i hbar beta' p^mu p^rho.
        for (std::size_t rho = lo; rho < D1; ++rho) {
            MultiPoly c = Bp * pmu * MultiPoly::symbol(table, rho) * hbar;
            X.add_term(single_deriv(fam.ctx, rho), RationalFn(fam.ctx, c * ih));
        }
        // +i hbar gamma p^mu.
        X.add_term(no_derivs(fam.ctx), RationalFn(fam.ctx, G * pmu * hbar * ih));

        fam.Xops[mu] = std::move(X);
        fam.Pops[mu] = DiffOp::mul(fam.ctx, pmu);
    }
    return fam;
}

} // namespace

OperatorFamily build_covariant_operators(const DeformationParams& params, int spatialDim,
                                         bool dimensionless, SymbolTablePtr table) {
    return build_family(AlgebraFamily::covariant, params, spatialDim, dimensionless,
                        std::move(table));
}

OperatorFamily build_kempf_operators(const DeformationParams& params, int spatialDim,
                                     bool dimensionless, SymbolTablePtr table) {
    return build_family(AlgebraFamily::euclidean, params, spatialDim, dimensionless,
                        std::move(table));
}

OperatorFamily restrict_to_spatial(const OperatorFamily& covariant) {
    if (covariant.family != AlgebraFamily::covariant)
        throw Error("restrict_to_spatial expects a covariant family");

    OperatorFamily fam = build_kempf_operators(covariant.params, covariant.spatialDim,
                                               covariant.dimensionless, covariant.ctx->table);
    const GaussianRational zero(0);
    for (std::size_t mu = 1; mu < covariant.index_count(); ++mu) {
        fam.Xops[mu] =
            covariant.Xops[mu].substitute(covariant.momentum(0), zero).with_context(fam.ctx);
        fam.Pops[mu] =
            covariant.Pops[mu].substitute(covariant.momentum(0), zero).with_context(fam.ctx);
    }
    return fam;
}

namespace {

// Scalar prefactor of the [X, X] right-hand side:
//   covariant: (2 beta - beta' - (2 beta + beta') beta s) / (1 - beta s)
//   Euclidean: (2 beta - beta' + (2 beta + beta') beta s) / (1 + beta s)
RationalFn xx_prefactor(const OperatorFamily& fam) {
    MultiPoly B = fam.beta_poly();
    MultiPoly Bp = fam.beta_prime_poly();
    MultiPoly s = fam.momentum_square();
    MultiPoly two_b_minus = B * GaussianRational(2) - Bp;
    MultiPoly two_b_plus = B * GaussianRational(2) + Bp;
    MultiPoly num = fam.family == AlgebraFamily::euclidean ? two_b_minus + two_b_plus * B * s
                                                           : two_b_minus - two_b_plus * B * s;
    return RationalFn(fam.ctx, num).over_base(0, 1);
}

// Right-hand side of [X^mu, P^nu]: -i hbar ((1 -+ beta s) g^{mu nu} - beta' p^mu p^nu).
DiffOp xp_rhs(const OperatorFamily& fam, std::size_t mu, std::size_t nu) {
    const auto& table = fam.ctx->table;
    MultiPoly poly(table);
    if (mu == nu) {
        int gmm = fam.family == AlgebraFamily::euclidean ? -1 : fam.metric().diag(mu);
        poly += fam.ctx->bases[0] * GaussianRational(Rational(gmm));
    }
    poly -= fam.beta_prime_poly() * MultiPoly::symbol(table, fam.momentum(mu)) *
            MultiPoly::symbol(table, fam.momentum(nu));
    poly = poly * fam.hbar_poly() * (-GaussianRational::i());
    return DiffOp::mul(fam.ctx, poly);
}

void check_zero(VerificationReport& rep, const std::string& name, const DiffOp& residual) {
    DiffOp r = residual.normalized();
    if (r.is_zero()) {
        rep.add(name, true);
    } else {
        rep.add(name, false, r.residual_term_count(), r.str());
    }
}

} // namespace

VerificationReport verify_deformed_algebra(const OperatorFamily& fam) {
    VerificationReport rep;
    {
        std::ostringstream subject;
        subject << (fam.family == AlgebraFamily::euclidean ? "euclidean" : "covariant")
                << " deformed algebra, D=" << fam.spatialDim;
        rep.subject = subject.str();
    }

    RationalFn ihG = xx_prefactor(fam) * GaussianRational::i();
    ihG = ihG * RationalFn(fam.ctx, fam.hbar_poly());

    for (std::size_t mu = fam.first_index(); mu < fam.index_count(); ++mu) {
        for (std::size_t nu = fam.first_index(); nu < fam.index_count(); ++nu) {
            DiffOp res = fam.X(mu).commutator(fam.P(nu)) - xp_rhs(fam, mu, nu);
            check_zero(rep, "[" + idx_name("X", mu) + "," + idx_name("P", nu) + "]", res);
        }
    }

    for (std::size_t mu = fam.first_index(); mu < fam.index_count(); ++mu) {
        for (std::size_t nu = mu + 1; nu < fam.index_count(); ++nu) {
            DiffOp rhs = fam.P(mu).compose(fam.X(nu)) - fam.P(nu).compose(fam.X(mu));
            DiffOp res = fam.X(mu).commutator(fam.X(nu)) - rhs.scaled(ihG);
            check_zero(rep, "[" + idx_name("X", mu) + "," + idx_name("X", nu) + "]", res);
        }
    }

    for (std::size_t mu = fam.first_index(); mu < fam.index_count(); ++mu) {
        for (std::size_t nu = mu + 1; nu < fam.index_count(); ++nu) {
            DiffOp res = fam.P(mu).commutator(fam.P(nu));
            check_zero(rep, "[" + idx_name("P", mu) + "," + idx_name("P", nu) + "]", res);
        }
    }

    return rep;
}

VerificationReport discrete_symmetry_check(const OperatorFamily& fam, DiscreteSymmetry which) {
    if (which == DiscreteSymmetry::time_reversal && fam.family != AlgebraFamily::covariant)
        throw Error("time reversal check is defined for the covariant family");

    VerificationReport rep;
    rep.subject = which == DiscreteSymmetry::parity ? "parity" : "time reversal";

    const std::size_t lo = fam.first_index();
    const std::size_t n = fam.index_count();

    auto sigmaX = [&](std::size_t mu) -> int {
        if (which == DiscreteSymmetry::parity) return mu == 0 ? +1 : -1;
        return mu == 0 ? -1 : +1;
    };
    auto sigmaP = [&](std::size_t mu) -> int { return mu == 0 ? +1 : -1; };
    const bool conjugate = which == DiscreteSymmetry::time_reversal;

    // Momentum reflection of the spatial directions, plus conjugation for the
    // antilinear case, realizes the map concretely on operators.
    auto transform = [&](const DiffOp& op) {
        DiffOp t = op;
        for (std::size_t i = 1; i < n; ++i) t = t.reflect_momentum(fam.momentum(i));
        if (conjugate) t = t.conj();
        return t;
    };

    for (std::size_t mu = lo; mu < n; ++mu) {
        DiffOp rx = transform(fam.X(mu)) - fam.X(mu).scaled(GaussianRational(Rational(sigmaX(mu))));
        check_zero(rep, "map(" + idx_name("X", mu) + ") - sign*" + idx_name("X", mu), rx);
        DiffOp rp = transform(fam.P(mu)) - fam.P(mu).scaled(GaussianRational(Rational(sigmaP(mu))));
        check_zero(rep, "map(" + idx_name("P", mu) + ") - sign*" + idx_name("P", mu), rp);
    }

    // Relation-level invariance: substitute the signed operators into the
    // defining relations, conjugating explicit scalars for the antilinear map,
    // and require the residuals to vanish identically.
    const GaussianRational iStar = conjugate ? -GaussianRational::i() : GaussianRational::i();
    RationalFn ihG = xx_prefactor(fam) * iStar;
    ihG = ihG * RationalFn(fam.ctx, fam.hbar_poly());

    const auto& table = fam.ctx->table;
    for (std::size_t mu = lo; mu < n; ++mu) {
        for (std::size_t nu = lo; nu < n; ++nu) {
            DiffOp lhs = fam.X(mu)
                             .scaled(GaussianRational(Rational(sigmaX(mu))))
                             .commutator(fam.P(nu).scaled(GaussianRational(Rational(sigmaP(nu)))));
            MultiPoly poly(table);
            if (mu == nu) {
                int gmm = fam.family == AlgebraFamily::euclidean ? -1 : fam.metric().diag(mu);
                poly += fam.ctx->bases[0] * GaussianRational(Rational(gmm));
            }
            poly -= fam.beta_prime_poly() * MultiPoly::symbol(table, fam.momentum(mu)) *
                    MultiPoly::symbol(table, fam.momentum(nu)) *
                    GaussianRational(Rational(sigmaP(mu) * sigmaP(nu)));
            poly = poly * fam.hbar_poly() * (-iStar);
            check_zero(rep, "sub([" + idx_name("X", mu) + "," + idx_name("P", nu) + "])",
                       lhs - DiffOp::mul(fam.ctx, poly));
        }
    }

    for (std::size_t mu = lo; mu < n; ++mu) {
        for (std::size_t nu = mu + 1; nu < n; ++nu) {
            DiffOp lhs = fam.X(mu)
                             .scaled(GaussianRational(Rational(sigmaX(mu))))
                             .commutator(fam.X(nu).scaled(GaussianRational(Rational(sigmaX(nu)))));
            DiffOp rhs = fam.P(mu).compose(fam.X(nu)).scaled(
                             GaussianRational(Rational(sigmaP(mu) * sigmaX(nu)))) -
                         fam.P(nu).compose(fam.X(mu)).scaled(
                             GaussianRational(Rational(sigmaP(nu) * sigmaX(mu))));
            check_zero(rep, "sub([" + idx_name("X", mu) + "," + idx_name("X", nu) + "])",
                       lhs - rhs.scaled(ihG));
        }
    }

    return rep;
}

WeightSpec weight_exponent(const Rational& beta, const Rational& betaPrime, const Rational& gamma,
                           int spatialDim, AlgebraFamily family) {
    Rational sum = beta + betaPrime;
    if (sum == 0)
        throw DegenerateWeightError("weight exponent undefined: beta + betaPrime == 0");
    const int dshift = family == AlgebraFamily::euclidean ? spatialDim + 1 : spatialDim + 2;
    Rational alpha = (2 * beta + betaPrime * dshift - 2 * gamma) / (2 * sum);
    return WeightSpec{std::move(alpha), std::move(sum), family, spatialDim};
}

bool physical_state_check(double betaPlusBetaPrime, double p0) {
    return betaPlusBetaPrime * p0 * p0 < 1.0;
}

} // namespace mlqm
