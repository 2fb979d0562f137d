#pragma once

// Moment integrals and uncertainty-product checks for the oscillator bound
// states, plus a direct two-sided probe of position-operator symmetry under
// the weighted scalar product  Integral dp f^{-alpha} phi* psi.

#include "mlqm/oscillator.hpp"
#include "mlqm/quadrature.hpp"

namespace mlqm {

struct MomentSet {
    double norm = 1;   // weighted norm of the state; 1 up to quadrature error
    double meanP = 0;  // first momentum moment (0 by parity)
    double meanPP = 0; // second momentum moment
    // Second position moment Integral dp f |psi'|^2 summed over components.
    double meanXX = 0;
    // Integral dp (psi1 psi1' + psi2 psi2'); i times this is the raw first
    // position moment, which vanishes by parity. Kept as a diagnostic.
    double firstMomentResidual = 0;
    double deltaP = 0;
    double deltaX = 0; // sqrt(meanXX); the first position moment is zero
    double p0sq = 0;   // sharp energy squared of the state
};

// Endpoint convergence of the moment integrands needs lambda = 1/(bt wt)
// above 1/2, i.e. betaTilde * omegaTilde < 2 (checked).
MomentSet oscillator_moments(const WavefunctionPair&, const QuadratureSpec& = {});

struct InequalityCheck {
    double lhs = 0;    // deltaX * deltaP
    double rhs = 0;    // (1/2) |1 - bt (p0^2 - meanPP)|
    double margin = 0; // lhs - rhs, non-negative when the bound holds
    bool satisfied = false;
};
// Deformed position-momentum uncertainty bound on a line, in units with
// hbar = m = c = 1 and the second deformation parameter switched off.
InequalityCheck position_momentum_inequality(const MomentSet&, double betaTilde);

// Smallest position spread compatible with the deformed commutator when the
// momentum spread is free to vary, at fixed momentum moments; isotropic case,
// hbar = c = 1. sumMeanPj2 is the sum of squared first moments over all
// spatial directions, meanPi2 the squared first moment along the measured one.
double minimal_deltaX(int dim, double beta, double betaPrime, double meanP0sq,
                      double sumMeanPj2, double meanPi2);
// The same with all first moments zero: the absolute floor
// sqrt((dim beta + betaPrime) (1 - beta meanP0sq)).
double absolute_minimal_deltaX(int dim, double beta, double betaPrime, double meanP0sq);

// Probe states u_k = f^{-lambda/2} C_k^{(lambda)}(z(p)) with
// f = K + bt p^2, K = 1 - bt p0^2; the position operator acts as
// i (f d/dp + gt p) and the scalar product carries the weight f^{-alpha}.
struct HermiticityProbe {
    double betaTilde = 0.25;
    double gammaTilde = 0; // symmetric exactly when gt == (1 - alpha) bt
    double alpha = 0;
    double lambda = 2;
    double p0 = 1;
    int n1 = 1;
    int n2 = 2;
};

struct HermiticityResult {
    // i times defect is <u1 | X u2> - <X u1 | u2>, integrated directly on
    // both sides (no integration by parts).
    double defect = 0;
    // 2 [gt - (1 - alpha) bt] Integral dp f^{-alpha} p u1 u2, the closed form
    // the direct difference must reproduce.
    double closedForm = 0;
    double scale = 0; // geometric mean of the probe norms, for relative error
};

HermiticityResult position_hermiticity(const HermiticityProbe&, const QuadratureSpec& = {});

} // namespace mlqm
