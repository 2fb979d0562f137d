#include "mlqm/poincare.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace mlqm {

namespace {

int metric_sign(std::size_t mu) { return mu == 0 ? +1 : -1; }

void require_covariant(const OperatorFamily& fam, const char* what) {
    if (fam.family != AlgebraFamily::covariant)
        throw Error(std::string(what) + " is defined for the covariant family only");
}

void check_index(const OperatorFamily& fam, std::size_t a) {
    if (a >= fam.index_count()) throw BadIndicesError("generator index out of range");
}

ExpVec single_deriv(const ContextPtr& ctx, std::size_t mu) {
    ExpVec d(ctx->table->momentum_count(), 0);
    d.at(mu) = 1;
    return d;
}

RationalFn inverse_base(const ContextPtr& ctx, std::size_t baseIndex) {
    return RationalFn(ctx, MultiPoly::constant(ctx->table, GaussianRational(1)))
        .over_base(baseIndex, 1);
}

RationalFn i_hbar(const OperatorFamily& fam) {
    return RationalFn(fam.ctx, fam.hbar_poly() * GaussianRational::i());
}

// Numerator of the translation-action prefactor g(s); the full prefactor is
// this over base^2.
MultiPoly translation_numerator(const OperatorFamily& fam, const MultiPoly& s) {
    MultiPoly B = fam.beta_poly();
    MultiPoly Bp = fam.beta_prime_poly();
    return B * GaussianRational(2) - Bp - (B * GaussianRational(2) + Bp) * B * s;
}

void check_zero(VerificationReport& rep, const std::string& name, const DiffOp& residual) {
    DiffOp r = residual.normalized();
    if (r.is_zero()) {
        rep.add(name, true);
    } else {
        rep.add(name, false, r.residual_term_count(), r.str());
    }
}

std::string pair_tag(std::size_t a, std::size_t b) {
    return std::to_string(a) + std::to_string(b);
}

} // namespace

DiffOp build_lorentz(const OperatorFamily& fam, std::size_t a, std::size_t b) {
    require_covariant(fam, "build_lorentz");
    check_index(fam, a);
    check_index(fam, b);
    if (a == b) return DiffOp(fam.ctx);
    // X_a P_b - X_b P_a = g_aa g_bb (X^a P^b - X^b P^a); the antisymmetrized
    // product is ordering independent because [X_a, P_b] is symmetric in a, b.
    DiffOp inner = fam.X(a).compose(fam.P(b)) - fam.X(b).compose(fam.P(a));
    inner = inner.scaled(GaussianRational(Rational(metric_sign(a) * metric_sign(b))));
    return inner.scaled(inverse_base(fam.ctx, 0));
}

DiffOp build_translation(const OperatorFamily& fam, std::size_t a) {
    require_covariant(fam, "build_translation");
    check_index(fam, a);
    MultiPoly pLower = MultiPoly::symbol(fam.ctx->table, fam.momentum(a)) *
                       GaussianRational(Rational(metric_sign(a)));
    return DiffOp::mul(RationalFn(fam.ctx, pLower).over_base(0, 1));
}

DiffOp undeformed_lorentz(const OperatorFamily& fam, std::size_t a, std::size_t b) {
    require_covariant(fam, "undeformed_lorentz");
    check_index(fam, a);
    check_index(fam, b);
    const auto& table = fam.ctx->table;
    MultiPoly mih = fam.hbar_poly() * (-GaussianRational::i());
    DiffOp op(fam.ctx);
    MultiPoly pbLower =
        MultiPoly::symbol(table, fam.momentum(b)) * GaussianRational(Rational(metric_sign(b)));
    MultiPoly paLower =
        MultiPoly::symbol(table, fam.momentum(a)) * GaussianRational(Rational(metric_sign(a)));
    op.add_term(single_deriv(fam.ctx, fam.momentum(a)), RationalFn(fam.ctx, pbLower * mih));
    op.add_term(single_deriv(fam.ctx, fam.momentum(b)), RationalFn(fam.ctx, paLower * (-mih)));
    return op;
}

VerificationReport verify_poincare_closure(const OperatorFamily& fam) {
    require_covariant(fam, "verify_poincare_closure");
    VerificationReport rep;
    {
        std::ostringstream subject;
        subject << "corrected generator closure, D=" << fam.spatialDim;
        rep.subject = subject.str();
    }

    const std::size_t n = fam.index_count();
    const RationalFn ih = i_hbar(fam);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

    std::map<std::pair<std::size_t, std::size_t>, DiffOp> L;
    for (auto [a, b] : pairs) L.emplace(std::make_pair(a, b), build_lorentz(fam, a, b));
    auto lorentz = [&](std::size_t a, std::size_t b) -> DiffOp {
        if (a == b) return DiffOp(fam.ctx);
        if (a < b) return L.at({a, b});
        return -L.at({b, a});
    };

    for (auto [a, b] : pairs) {
        const DiffOp& Lab = L.at({a, b});
        check_zero(rep, "L" + pair_tag(a, b) + " == undeformed form",
                   Lab - undeformed_lorentz(fam, a, b));

        bool denomFree = true;
        for (const auto& [derivs, coeff] : Lab.terms()) {
            (void)derivs;
            if (coeff.den_pow(0) != 0) denomFree = false;
        }
        rep.add("L" + pair_tag(a, b) + " denominator cancels", denomFree);
    }

    // [L_ab, L_cd] = -i hbar (g_ac L_bd - g_ad L_bc - g_bc L_ad + g_bd L_ac).
    for (auto [a, b] : pairs) {
        for (auto [c, d] : pairs) {
            DiffOp rhs(fam.ctx);
            if (a == c) rhs += lorentz(b, d).scaled(GaussianRational(Rational(metric_sign(a))));
            if (a == d) rhs -= lorentz(b, c).scaled(GaussianRational(Rational(metric_sign(a))));
            if (b == c) rhs -= lorentz(a, d).scaled(GaussianRational(Rational(metric_sign(b))));
            if (b == d) rhs += lorentz(a, c).scaled(GaussianRational(Rational(metric_sign(b))));
            DiffOp res = lorentz(a, b).commutator(lorentz(c, d)) + rhs.scaled(ih);
            check_zero(rep, "[L" + pair_tag(a, b) + ",L" + pair_tag(c, d) + "]", res);
        }
    }

    // [L_ab, Phat_c] = i hbar (g_bc Phat_a - g_ac Phat_b).
    std::vector<DiffOp> T;
    for (std::size_t c = 0; c < n; ++c) T.push_back(build_translation(fam, c));
    for (auto [a, b] : pairs) {
        for (std::size_t c = 0; c < n; ++c) {
            DiffOp rhs(fam.ctx);
            if (b == c) rhs += T[a].scaled(GaussianRational(Rational(metric_sign(b))));
            if (a == c) rhs -= T[b].scaled(GaussianRational(Rational(metric_sign(a))));
            DiffOp res = lorentz(a, b).commutator(T[c]) - rhs.scaled(ih);
            check_zero(rep, "[L" + pair_tag(a, b) + ",T" + std::to_string(c) + "]", res);
        }
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            check_zero(rep, "[T" + std::to_string(a) + ",T" + std::to_string(b) + "]",
                       T[a].commutator(T[b]));

    return rep;
}

VerificationReport verify_generator_action(const OperatorFamily& fam) {
    require_covariant(fam, "verify_generator_action");
    VerificationReport rep;
    {
        std::ostringstream subject;
        subject << "generator action on deformed operators, D=" << fam.spatialDim;
        rep.subject = subject.str();
    }

    const std::size_t n = fam.index_count();
    const auto& table = fam.ctx->table;
    const GaussianRational i = GaussianRational::i();
    const RationalFn hbarFn(fam.ctx, fam.hbar_poly());

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            // Upper-index generator L^ab = g^aa g^bb L_ab.
            DiffOp Lup = build_lorentz(fam, a, b)
                             .scaled(GaussianRational(Rational(metric_sign(a) * metric_sign(b))));
            for (std::size_t mu = 0; mu < n; ++mu) {
                // i [L^ab, X^mu] = hbar (g^{mu a} X^b - g^{mu b} X^a).
                DiffOp rhsX(fam.ctx);
                if (mu == a) rhsX += fam.X(b).scaled(GaussianRational(Rational(metric_sign(mu))));
                if (mu == b) rhsX -= fam.X(a).scaled(GaussianRational(Rational(metric_sign(mu))));
                DiffOp resX = Lup.commutator(fam.X(mu)).scaled(i) - rhsX.scaled(hbarFn);
                check_zero(rep, "i[L" + pair_tag(a, b) + ",X" + std::to_string(mu) + "]", resX);

                DiffOp rhsP(fam.ctx);
                if (mu == a) rhsP += fam.P(b).scaled(GaussianRational(Rational(metric_sign(mu))));
                if (mu == b) rhsP -= fam.P(a).scaled(GaussianRational(Rational(metric_sign(mu))));
                DiffOp resP = Lup.commutator(fam.P(mu)).scaled(i) - rhsP.scaled(hbarFn);
                check_zero(rep, "i[L" + pair_tag(a, b) + ",P" + std::to_string(mu) + "]", resP);
            }
        }
    }

    // i [Phat_a, X^mu] = -hbar delta^mu_a - hbar g(s) g_aa p^a p^mu.
    MultiPoly num = translation_numerator(fam, fam.momentum_square());
    for (std::size_t a = 0; a < n; ++a) {
        DiffOp Ta = build_translation(fam, a);
        for (std::size_t mu = 0; mu < n; ++mu) {
            DiffOp res = Ta.commutator(fam.X(mu)).scaled(i);
            if (mu == a) res += DiffOp::identity(fam.ctx).scaled(hbarFn);
            MultiPoly pp = num * MultiPoly::symbol(table, fam.momentum(a)) *
                           MultiPoly::symbol(table, fam.momentum(mu)) * fam.hbar_poly() *
                           GaussianRational(Rational(metric_sign(a)));
            res += DiffOp::mul(RationalFn(fam.ctx, pp).over_base(0, 2));
            check_zero(rep, "i[T" + std::to_string(a) + ",X" + std::to_string(mu) + "]", res);

            check_zero(rep, "[T" + std::to_string(a) + ",P" + std::to_string(mu) + "]",
                       Ta.commutator(fam.P(mu)));
        }
    }

    return rep;
}

VerificationReport verify_first_order_invariance(const OperatorFamily& fam) {
    require_covariant(fam, "verify_first_order_invariance");
    VerificationReport rep;
    {
        std::ostringstream subject;
        subject << "first-order transformation invariance, D=" << fam.spatialDim;
        rep.subject = subject.str();
    }

    const std::size_t n = fam.index_count();
    const auto& table = fam.ctx->table;
    const std::size_t nil = fam.symNil();
    const GaussianRational i = GaussianRational::i();
    MultiPoly dw = MultiPoly::symbol(table, nil);
    MultiPoly B = fam.beta_poly();
    MultiPoly Bp = fam.beta_prime_poly();
    MultiPoly hbar = fam.hbar_poly();
    MultiPoly s = fam.momentum_square();

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::string tag = "dw" + pair_tag(a, b) + " ";

            // X'^mu = X^mu + dw (g^{mu a} X^b - g^{mu b} X^a), same for P' and
            // for the plain momentum polynomials.
            std::vector<DiffOp> Xp, Pp;
            std::vector<MultiPoly> pPrime;
            for (std::size_t mu = 0; mu < n; ++mu) {
                DiffOp dX(fam.ctx), dP(fam.ctx);
                MultiPoly dp(table);
                if (mu == a) {
                    GaussianRational sgn{Rational(metric_sign(mu))};
                    dX += fam.X(b).scaled(sgn);
                    dP += fam.P(b).scaled(sgn);
                    dp += MultiPoly::symbol(table, fam.momentum(b)) * sgn;
                }
                if (mu == b) {
                    GaussianRational sgn{Rational(metric_sign(mu))};
                    dX -= fam.X(a).scaled(sgn);
                    dP -= fam.P(a).scaled(sgn);
                    dp -= MultiPoly::symbol(table, fam.momentum(a)) * sgn;
                }
                RationalFn dwFn(fam.ctx, dw);
                Xp.push_back(fam.X(mu) + dX.scaled(dwFn));
                Pp.push_back(fam.P(mu) + dP.scaled(dwFn));
                pPrime.push_back(MultiPoly::symbol(table, fam.momentum(mu)) + dp * dw);
            }

            MultiPoly sPrime(table);
            for (std::size_t mu = 0; mu < n; ++mu) {
                MultiPoly sq = pPrime[mu] * pPrime[mu];
                sPrime += metric_sign(mu) > 0 ? sq : -sq;
            }
            rep.add(tag + "p.p invariant", sPrime.truncate_above(nil, 1) == s);

            MultiPoly basePrime =
                MultiPoly::constant(table, GaussianRational(1)) - B * sPrime;

            for (std::size_t mu = 0; mu < n; ++mu) {
                for (std::size_t nu = 0; nu < n; ++nu) {
                    MultiPoly rhs(table);
                    if (mu == nu) rhs += basePrime * GaussianRational(Rational(metric_sign(mu)));
                    rhs -= Bp * pPrime[mu] * pPrime[nu];
                    rhs = rhs * hbar * (-i);
                    DiffOp res = Xp[mu].commutator(Pp[nu]) - DiffOp::mul(fam.ctx, rhs);
                    check_zero(rep, tag + "[X" + std::to_string(mu) + ",P" + std::to_string(nu) + "]",
                               res.truncate_above(nil, 1));
                }
            }

            // Denominator-free form of the XX relation: multiply through by
            // the transformed base, so G(s') never has to be inverted.
            MultiPoly numPrime = translation_numerator(fam, sPrime);
            for (std::size_t mu = 0; mu < n; ++mu) {
                for (std::size_t nu = mu + 1; nu < n; ++nu) {
                    DiffOp lhs =
                        Xp[mu].commutator(Xp[nu]).scaled(RationalFn(fam.ctx, basePrime));
                    DiffOp rhs = Pp[mu].compose(Xp[nu]) - Pp[nu].compose(Xp[mu]);
                    rhs = rhs.scaled(RationalFn(fam.ctx, numPrime * hbar * i));
                    check_zero(rep, tag + "[X" + std::to_string(mu) + ",X" + std::to_string(nu) + "]",
                               (lhs - rhs).truncate_above(nil, 1));

                    check_zero(rep, tag + "[P" + std::to_string(mu) + ",P" + std::to_string(nu) + "]",
                               Pp[mu].commutator(Pp[nu]).truncate_above(nil, 1));
                }
            }
        }
    }

    return rep;
}

namespace {

MultiPoly tp_param(const SymbolTablePtr& table, const ParamSpec& p, std::size_t symIndex) {
    if (p.formal) return MultiPoly::symbol(table, symIndex);
    return MultiPoly::constant(table, GaussianRational(p.value));
}

} // namespace

TwoParticleResult two_particle_check(const DeformationParams& params) {
    // Joint system of two (1+1)-dimensional particles; momentum layout
    // p1_0, p1_1, p2_0, p2_1 with one base factor per particle.
    auto table = make_table({"p1_0", "p1_1", "p2_0", "p2_1", "beta", "betaPrime", "gamma", "hbar"},
                            4);
    MultiPoly B = tp_param(table, params.beta, 4);
    MultiPoly Bp = tp_param(table, params.betaPrime, 5);
    MultiPoly G = tp_param(table, params.gamma, 6);
    MultiPoly hbar = MultiPoly::symbol(table, 7);
    MultiPoly one = MultiPoly::constant(table, GaussianRational(1));

    auto mom = [&](std::size_t particle, std::size_t mu) { return 2 * (particle - 1) + mu; };
    auto psym = [&](std::size_t particle, std::size_t mu) {
        return MultiPoly::symbol(table, mom(particle, mu));
    };

    std::vector<MultiPoly> sk, base;
    for (std::size_t k = 1; k <= 2; ++k) {
        MultiPoly s = psym(k, 0) * psym(k, 0) - psym(k, 1) * psym(k, 1);
        sk.push_back(s);
        base.push_back(one - B * s);
    }
    ContextPtr ctx = make_context(table, base);

    const GaussianRational i = GaussianRational::i();
    auto single_deriv_at = [&](std::size_t idx) {
        ExpVec d(table->momentum_count(), 0);
        d.at(idx) = 1;
        return d;
    };

    // X_k^mu following the covariant construction, touching only particle k.
    auto buildX = [&](std::size_t k, std::size_t mu) {
        DiffOp X(ctx);
        int gmm = metric_sign(mu);
        X.add_term(single_deriv_at(mom(k, mu)),
                   RationalFn(ctx, base[k - 1] * hbar * GaussianRational(Rational(-gmm)) * i));
        for (std::size_t rho = 0; rho < 2; ++rho)
            X.add_term(single_deriv_at(mom(k, rho)),
                       RationalFn(ctx, Bp * psym(k, mu) * psym(k, rho) * hbar * i));
        X.add_term(ExpVec(table->momentum_count(), 0),
                   RationalFn(ctx, G * psym(k, mu) * hbar * i));
        return X;
    };

    TwoParticleResult out;
    out.formula.subject = "two-particle relative-coordinate translation residual";
    out.residualVanishes = true;

    for (std::size_t a = 0; a < 2; ++a) {
        // Additive corrected generator u_1^{-1} p_1a + u_2^{-1} p_2a.
        RationalFn phat(ctx);
        for (std::size_t k = 1; k <= 2; ++k)
            phat += RationalFn(ctx, psym(k, a) * GaussianRational(Rational(metric_sign(a))))
                        .over_base(k - 1, 1);
        DiffOp T12 = DiffOp::mul(phat);

        for (std::size_t mu = 0; mu < 2; ++mu) {
            DiffOp rel = buildX(1, mu) - buildX(2, mu);
            DiffOp residual = T12.commutator(rel).scaled(i);

            // hbar g_aa (g(s_2) p_2^a p_2^mu - g(s_1) p_1^a p_1^mu).
            RationalFn expected(ctx);
            for (std::size_t k = 1; k <= 2; ++k) {
                MultiPoly numK =
                    B * GaussianRational(2) - Bp - (B * GaussianRational(2) + Bp) * B * sk[k - 1];
                RationalFn term = RationalFn(ctx, numK * psym(k, a) * psym(k, mu) * hbar *
                                                      GaussianRational(Rational(metric_sign(a))))
                                      .over_base(k - 1, 2);
                expected += k == 2 ? term : -term;
            }

            DiffOp diff = (residual - DiffOp::mul(expected)).normalized();
            std::string name = "i[T12_" + std::to_string(a) + ", X1_" + std::to_string(mu) +
                               " - X2_" + std::to_string(mu) + "] matches closed form";
            if (diff.is_zero())
                out.formula.add(name, true);
            else
                out.formula.add(name, false, diff.residual_term_count(), diff.str());

            DiffOp r = residual.normalized();
            if (!r.is_zero()) {
                out.residualVanishes = false;
                if (out.residualText.empty()) out.residualText = r.str();
            }
        }
    }

    return out;
}

} // namespace mlqm
