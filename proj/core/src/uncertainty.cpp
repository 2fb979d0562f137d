#include "mlqm/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace mlqm {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw NonPhysicalConfigError(msg);
}

// Integral over the whole momentum line through p = c tan(theta); the caller
// supplies the integrand already multiplied by dp/dtheta = c sec^2(theta).
double theta_integral(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    const double half = std::asin(1.0);
    return integrate(f, -half, half, spec).value;
}

} // namespace

MomentSet oscillator_moments(const WavefunctionPair& w, const QuadratureSpec& spec) {
    require(w.lambda > 0.5, "moment integrals need lambda = 1/(bt wt) > 1/2");
    const double c = w.pScale();
    const double bt = w.cfg.betaTilde;

    auto weighted = [&](auto density) {
        // Weight f^{-1} against dp cancels to the flat measure (c / K) dtheta.
        return theta_integral(
            [&](double theta) {
                const double p = c * std::tan(theta);
                const double a = w.psi1(p);
                const double b = w.psi2(p);
                return density(p) * (a * a + b * b) * (c / w.K);
            },
            spec);
    };

    MomentSet m;
    m.norm = weighted([](double) { return 1.0; });
    m.meanP = weighted([](double p) { return p; }) / m.norm;
    m.meanPP = weighted([](double p) { return p * p; }) / m.norm;

    m.meanXX = theta_integral(
                   [&](double theta) {
                       const double p = c * std::tan(theta);
                       const double sec2 = 1.0 + std::tan(theta) * std::tan(theta);
                       const Dual d1 = w.psi1(Dual::variable(p));
                       const Dual d2 = w.psi2(Dual::variable(p));
                       const double fv = w.K + bt * p * p;
                       return fv * (d1.d * d1.d + d2.d * d2.d) * c * sec2;
                   },
                   spec)
             / m.norm;

    m.firstMomentResidual = theta_integral(
        [&](double theta) {
            const double p = c * std::tan(theta);
            const double sec2 = 1.0 + std::tan(theta) * std::tan(theta);
            const Dual d1 = w.psi1(Dual::variable(p));
            const Dual d2 = w.psi2(Dual::variable(p));
            return (d1.v * d1.d + d2.v * d2.d) * c * sec2;
        },
        spec);

    m.deltaP = std::sqrt(std::max(0.0, m.meanPP - m.meanP * m.meanP));
    m.deltaX = std::sqrt(std::max(0.0, m.meanXX));
    m.p0sq = w.p0 * w.p0;
    return m;
}

InequalityCheck position_momentum_inequality(const MomentSet& m, double betaTilde) {
    InequalityCheck c;
    c.lhs = m.deltaX * m.deltaP;
    c.rhs = 0.5 * std::abs(1.0 - betaTilde * (m.p0sq - m.meanPP));
    c.margin = c.lhs - c.rhs;
    c.satisfied = c.margin >= 0.0;
    return c;
}

double minimal_deltaX(int dim, double beta, double betaPrime, double meanP0sq,
                      double sumMeanPj2, double meanPi2) {
    require(dim >= 1, "dimension must be at least 1");
    require(beta >= 0 && betaPrime >= 0, "deformation parameters must be non-negative");
    const double radicand =
        (dim * beta + betaPrime) * (1.0 - beta * (meanP0sq - sumMeanPj2) + betaPrime * meanPi2);
    require(radicand >= 0, "no real minimum: the state lies outside the physical band");
    return std::sqrt(radicand);
}

double absolute_minimal_deltaX(int dim, double beta, double betaPrime, double meanP0sq) {
    return minimal_deltaX(dim, beta, betaPrime, meanP0sq, 0.0, 0.0);
}

HermiticityResult position_hermiticity(const HermiticityProbe& probe,
                                       const QuadratureSpec& spec) {
    require(probe.betaTilde > 0, "the probe needs betaTilde > 0");
    require(probe.lambda > 0, "the probe profile exponent must be positive");
    require(probe.n1 >= 0 && probe.n2 >= 0, "probe indices must be non-negative");
    const double bt = probe.betaTilde;
    const double K = 1.0 - bt * probe.p0 * probe.p0;
    require(K > 0, "p0 must satisfy bt p0^2 < 1");
    // Endpoint convergence of the weighted integrands.
    require(probe.alpha + probe.lambda > 1.0, "need alpha + lambda > 1");

    const double c = std::sqrt(K / bt);
    auto u = [&](int k, Dual p) {
        const Dual fv = Dual(K) + Dual(bt) * p * p;
        const Dual z = p * sqrt(Dual(bt) / fv);
        return pow(fv, -0.5 * probe.lambda) * gegenbauer(k, probe.lambda, z);
    };

    auto moment = [&](auto density) {
        return theta_integral(
            [&](double theta) {
                const double p = c * std::tan(theta);
                const double sec2 = 1.0 + std::tan(theta) * std::tan(theta);
                const double fv = K + bt * p * p;
                const double weight = std::pow(fv, -probe.alpha);
                const Dual u1 = u(probe.n1, Dual::variable(p));
                const Dual u2 = u(probe.n2, Dual::variable(p));
                return density(p, fv, weight, u1, u2) * c * sec2;
            },
            spec);
    };

    HermiticityResult out;
    out.defect = moment([&](double p, double fv, double weight, Dual u1, Dual u2) {
        return weight * fv * (u1.v * u2.d + u1.d * u2.v)
             + 2.0 * probe.gammaTilde * weight * p * u1.v * u2.v;
    });
    const double cross = moment([](double p, double, double weight, Dual u1, Dual u2) {
        return weight * p * u1.v * u2.v;
    });
    out.closedForm = 2.0 * (probe.gammaTilde - (1.0 - probe.alpha) * bt) * cross;

    const double norm1 = moment([](double, double, double weight, Dual u1, Dual) {
        return weight * u1.v * u1.v;
    });
    const double norm2 = moment([](double, double, double weight, Dual, Dual u2) {
        return weight * u2.v * u2.v;
    });
    out.scale = std::sqrt(norm1 * norm2);
    return out;
}

} // namespace mlqm
