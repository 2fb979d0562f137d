#include "mlqm/oscillator.hpp"

#include "mlqm/diff_op.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace mlqm {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool cond, const std::string& msg) {
    if (!cond) throw NonPhysicalConfigError(msg);
}

void check_level(int n, int tau) {
    if (tau != 1 && tau != -1) throw NonPhysicalConfigError("tau must be +1 or -1");
    if (n < 0) throw NonPhysicalConfigError("the level index must be non-negative");
    if (n == 0 && tau == -1)
        throw NoGroundNegativeError("the (n, tau) = (0, -1) level has no solution");
}

} // namespace

OscillatorConfig make_config(double betaTilde, double omegaTilde) {
    require(betaTilde >= 0.0 && betaTilde < 1.0, "betaTilde must lie in [0, 1)");
    require(omegaTilde > 0.0, "omegaTilde must be positive");
    return {betaTilde, omegaTilde};
}

OscillatorConfig from_physical(const PhysicalInput& in) {
    require(in.mass > 0 && in.omega > 0 && in.c > 0 && in.hbar > 0,
            "mass, omega, c and hbar must be positive");
    require(in.beta >= 0, "beta must be non-negative");
    const double mc = in.mass * in.c;
    return make_config(in.beta * mc * mc, in.hbar * in.omega / (mc * in.c));
}

SpectrumPoint quantize(const OscillatorConfig& cfg, int n, int tau) {
    check_level(n, tau);
    const double bt = cfg.betaTilde;
    const double wn = cfg.omegaTilde * n;
    const double W = wn * (2.0 + bt * wn);
    SpectrumPoint sp;
    sp.n = n;
    sp.tau = tau;
    sp.p0 = tau * std::sqrt((1.0 + W) / (1.0 + bt * W));
    // (p0^2 - 1) written without cancellation for large n.
    sp.eShift = W * (1.0 - bt) / (1.0 + bt * W);
    sp.boundRatio = std::abs(sp.p0) * std::sqrt(bt);
    return sp;
}

double quantize_p0_alt(const OscillatorConfig& cfg, int n, int tau) {
    check_level(n, tau);
    require(cfg.betaTilde > 0, "the alternative closed form needs betaTilde > 0");
    const double Q = 1.0 + cfg.betaTilde * cfg.omegaTilde * n;
    return tau * std::sqrt((1.0 + (cfg.betaTilde - 1.0) / (Q * Q)) / cfg.betaTilde);
}

double ladder_g(const OscillatorConfig& cfg, int i) {
    return 1.0 + cfg.betaTilde * cfg.omegaTilde * i;
}

double level_shift(const OscillatorConfig& cfg, int i, double p0) {
    require(i >= 1, "level shifts start at i = 1");
    const double K = 1.0 - cfg.betaTilde * p0 * p0;
    return cfg.omegaTilde * (ladder_g(cfg, i - 1) + ladder_g(cfg, i)) * K;
}

double susy_eigenvalue(const OscillatorConfig& cfg, int n, double p0) {
    const double wn = cfg.omegaTilde * n;
    const double K = 1.0 - cfg.betaTilde * p0 * p0;
    return wn * (2.0 + cfg.betaTilde * wn) * K;
}

double p0_small_deformation(const OscillatorConfig& cfg, int n) {
    const double wn = cfg.omegaTilde * n;
    const double s2 = 1.0 + 2.0 * wn;
    return std::sqrt(s2) * (1.0 - 1.5 * cfg.betaTilde * wn * wn / s2);
}

double p0_nonrelativistic(const OscillatorConfig& cfg, int n) {
    const double wn = cfg.omegaTilde * n;
    return (1.0 + wn * (1.0 + 0.5 * cfg.betaTilde * wn)) / (1.0 + cfg.betaTilde * wn);
}

namespace {

// sign = -1 builds g p - w f d/dp, sign = +1 builds g p + w f d/dp.
DiffOp ladder_op(const ContextPtr& ctx, const MultiPoly& g, const MultiPoly& pt,
                 const MultiPoly& wf, int sign) {
    DiffOp op = DiffOp::mul(ctx, g * pt);
    op.add_term(ExpVec{1}, RationalFn(ctx, sign > 0 ? wf : -wf));
    return op;
}

void check_zero(VerificationReport& report, std::string name, const DiffOp& residual) {
    report.add(std::move(name), residual.is_zero(), residual.residual_term_count(),
               residual.is_zero() ? std::string{} : residual.str());
}

} // namespace

VerificationReport shape_invariance_report() {
    auto table = make_table({"pt", "pt0", "bt", "wt", "g", "h"}, 1);
    ContextPtr ctx = make_context(table, {});
    auto sym = [&](const char* name) { return MultiPoly::symbol(table, table->index(name)); };
    const MultiPoly pt = sym("pt"), pt0 = sym("pt0"), bt = sym("bt"), wt = sym("wt");
    const MultiPoly g = sym("g"), h = sym("h");
    const MultiPoly one = MultiPoly::constant(table, GaussianRational(1));
    const MultiPoly f = one - bt * pt0 * pt0 + bt * pt * pt;
    const MultiPoly wf = wt * f;

    auto Bminus = [&](const MultiPoly& gg) { return ladder_op(ctx, gg, pt, wf, +1); };
    auto Bplus = [&](const MultiPoly& gg) { return ladder_op(ctx, gg, pt, wf, -1); };

    VerificationReport report;
    report.subject = "ladder factorization algebra";

    const DiffOp lhs = Bminus(g).compose(Bplus(g));

    check_zero(report, "Bm(g) Bp(g) - Bp(h) Bm(h) == (g^2 - h^2) pt^2 + (g + h) wt f",
               lhs - Bplus(h).compose(Bminus(h))
                   - DiffOp::mul(ctx, (g * g - h * h) * pt * pt + (g + h) * wf));

    const MultiPoly hShift = g + bt * wt;
    check_zero(report, "shift branch h = g + bt wt leaves the momentum-free remainder (g + h) wt (1 - bt pt0^2)",
               lhs - Bplus(hShift).compose(Bminus(hShift))
                   - DiffOp::mul(ctx, (g + hShift) * wt * (one - bt * pt0 * pt0)));

    check_zero(report, "reflection branch h = -g: both products coincide",
               lhs - Bplus(-g).compose(Bminus(-g)));

    check_zero(report, "bt = 0 limit: [Bm(g), Bp(g)] == 2 g wt",
               Bminus(g).commutator(Bplus(g)).substitute(table->index("bt"), GaussianRational(0))
                   - DiffOp::mul(ctx, (g * wt) * GaussianRational(2)));

    return report;
}

WavefunctionPair build_wavefunctions(const OscillatorConfig& cfg, int n, int tau) {
    check_level(n, tau);
    require(cfg.betaTilde > 0, "eigenfunction construction needs betaTilde > 0");
    const SpectrumPoint sp = quantize(cfg, n, tau);
    const double bt = cfg.betaTilde;

    WavefunctionPair w;
    w.cfg = cfg;
    w.n = n;
    w.tau = tau;
    w.p0 = sp.p0;
    w.K = 1.0 - bt * sp.p0 * sp.p0;
    w.lambda = 1.0 / (bt * cfg.omegaTilde);

    // log of the radial normalization 2^mu Gamma(mu)
    //   * sqrt( sqrt(bt) (mu + k) k! K^{mu + 1/2} / (2 pi Gamma(2 mu + k)) ),
    // shared by both components with (k, mu) = (n, lambda) and (n-1, lambda+1).
    auto logA = [&](int k, double mu) {
        return mu * std::log(2.0) + std::lgamma(mu)
             + 0.5 * (0.5 * std::log(bt) + std::log(mu + k) + std::lgamma(k + 1.0)
                      + (mu + 0.5) * std::log(w.K) - std::log(2.0 * kPi)
                      - std::lgamma(2.0 * mu + k));
    };

    // Both radicands are non-negative on either sign branch: |p0| >= 1.
    w.logN1 = 0.5 * std::log((sp.p0 + 1.0) / (2.0 * sp.p0)) + logA(n, w.lambda);
    if (n >= 1) {
        w.logN2 = 0.5 * std::log((sp.p0 - 1.0) / (2.0 * sp.p0)) + logA(n - 1, w.lambda + 1.0);
        w.sign2 = tau;
    }
    return w;
}

double WavefunctionPair::psi1(double p) const {
    const LogValue c = log_gegenbauer(n, lambda, z_from_p(K, cfg.betaTilde, p));
    if (c.sign == 0) return 0.0;
    return c.sign * std::exp(logN1 - 0.5 * lambda * std::log(f(p)) + c.logAbs);
}

double WavefunctionPair::psi2(double p) const {
    if (sign2 == 0) return 0.0;
    const LogValue c = log_gegenbauer(n - 1, lambda + 1.0, z_from_p(K, cfg.betaTilde, p));
    if (c.sign == 0) return 0.0;
    return sign2 * c.sign * std::exp(logN2 - 0.5 * (lambda + 1.0) * std::log(f(p)) + c.logAbs);
}

Dual WavefunctionPair::psi1(Dual p) const {
    const Dual fv = Dual(K) + Dual(cfg.betaTilde) * p * p;
    const Dual z = p * sqrt(Dual(cfg.betaTilde) / fv);
    return Dual(std::exp(logN1)) * pow(fv, -0.5 * lambda) * gegenbauer(n, lambda, z);
}

Dual WavefunctionPair::psi2(Dual p) const {
    if (sign2 == 0) return Dual(0.0);
    const Dual fv = Dual(K) + Dual(cfg.betaTilde) * p * p;
    const Dual z = p * sqrt(Dual(cfg.betaTilde) / fv);
    return Dual(sign2 * std::exp(logN2)) * pow(fv, -0.5 * (lambda + 1.0))
         * gegenbauer(n - 1, lambda + 1.0, z);
}

double dirac_residual_at(const WavefunctionPair& w, double p0used, int samples) {
    require(samples >= 1, "need at least one sample momentum");
    const double bt = w.cfg.betaTilde;
    const double wt = w.cfg.omegaTilde;
    const double Kused = 1.0 - bt * p0used * p0used;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double z = 0.95 * std::cos(kPi * (i + 0.5) / samples);
        const double p = p_from_z(w.K, bt, z);
        const Dual d1 = w.psi1(Dual::variable(p));
        const Dual d2 = w.psi2(Dual::variable(p));
        const double fv = Kused + bt * p * p;
        const double r1 = p * d2.v - wt * fv * d2.d - (p0used - 1.0) * d1.v;
        const double r2 = p * d1.v + wt * fv * d1.d - (p0used + 1.0) * d2.v;
        const double scale = std::abs(p * d2.v) + std::abs(wt * fv * d2.d)
                           + std::abs((p0used - 1.0) * d1.v) + std::abs(p * d1.v)
                           + std::abs(wt * fv * d1.d) + std::abs((p0used + 1.0) * d2.v);
        worst = std::max(worst, std::max(std::abs(r1), std::abs(r2)) / std::max(scale, 1e-300));
    }
    return worst;
}

double dirac_residual(const WavefunctionPair& w, int samples) {
    return dirac_residual_at(w, w.p0, samples);
}

double norm_quadrature(const WavefunctionPair& w, const QuadratureSpec& spec) {
    const double c = w.pScale();
    const double half = std::asin(1.0);
    auto integrand = [&](double theta) {
        const double p = c * std::tan(theta);
        const double a = w.psi1(p);
        const double b = w.psi2(p);
        return (a * a + b * b) * (c / w.K);
    };
    return integrate(integrand, -half, half, spec).value;
}

double overlap(const WavefunctionPair& a, const WavefunctionPair& b,
               const QuadratureSpec& spec) {
    auto integrand = [&](double p) {
        const double weight = 1.0 / std::sqrt(a.f(p) * b.f(p));
        return (a.psi1(p) * b.psi1(p) + a.psi2(p) * b.psi2(p)) * weight;
    };
    return integrate_real_line(integrand, std::max(a.pScale(), b.pScale()), spec).value;
}

double recursion_ratio(int n, double lambda, double z) {
    require(n >= 1, "the ladder step needs n >= 1");
    const Dual c = gegenbauer(n - 1, lambda + 1.0, Dual::variable(z));
    const double lhs = (1.0 - z * z) * c.d + (1.0 - 2.0 * (lambda + 1.0)) * z * c.v;
    return lhs / gegenbauer(n, lambda, z);
}

double recursion_ratio_spread(int n, double lambda, int samples) {
    require(n >= 1 && samples >= 2, "need n >= 1 and at least two samples");
    std::vector<double> zs, lo, hi;
    double denomMax = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double z = 0.9 * std::cos(kPi * (i + 0.5) / samples);
        zs.push_back(z);
        denomMax = std::max(denomMax, std::abs(gegenbauer(n, lambda, z)));
    }
    double rmin = 0.0, rmax = 0.0;
    bool first = true;
    for (double z : zs) {
        // Skip near-roots of the target polynomial; the ratio is 0/0 there.
        if (std::abs(gegenbauer(n, lambda, z)) < 1e-6 * denomMax) continue;
        const double r = recursion_ratio(n, lambda, z);
        if (first) {
            rmin = rmax = r;
            first = false;
        } else {
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
    }
    require(!first, "all samples fell on roots of the target polynomial");
    return rmax - rmin;
}

} // namespace mlqm
