#pragma once

// Exact bound states of the two-component oscillator on a line realized over
// the deformed momentum space (one deformation parameter bt in [0,1), the
// second one switched off). The coupled first-order system
//
//   Bplus  psi2 = (p0 - 1) psi1        Bpm = p -+ wt f(p, p0) d/dp
//   Bminus psi1 = (p0 + 1) psi2        f   = 1 - bt (p0^2 - p^2)
//
// factorizes into an energy-dependent ladder; shape invariance of the ladder
// fixes the spectrum in closed form and the eigenfunctions as Gegenbauer
// polynomials of a compactified momentum variable.

#include "mlqm/dual.hpp"
#include "mlqm/errors.hpp"
#include "mlqm/quadrature.hpp"
#include "mlqm/report.hpp"
#include "mlqm/special_functions.hpp"

namespace mlqm {

struct OscillatorConfig {
    double betaTilde = 0;  // deformation strength, in [0, 1)
    double omegaTilde = 1; // frequency in rest-energy units, > 0
};

// Range-checked constructor. betaTilde == 0 (undeformed limit) supports the
// spectrum functions only; wavefunctions need betaTilde > 0.
OscillatorConfig make_config(double betaTilde, double omegaTilde);

// Dimensionful parameters; betaTilde = beta m^2 c^2, omegaTilde =
// hbar omega / (m c^2). Energies scale back through E = m c^2 p0.
struct PhysicalInput {
    double mass = 1;
    double omega = 1;
    double beta = 0;
    double c = 1;
    double hbar = 1;
};
OscillatorConfig from_physical(const PhysicalInput&);

struct SpectrumPoint {
    int n = 0;
    int tau = +1;
    double p0 = 1;         // sharp dimensionless energy, sign = tau
    double eShift = 0;     // p0^2 - 1, equals the ladder eigenvalue
    double boundRatio = 0; // |p0| sqrt(betaTilde), strictly below 1
};

// Closed-form level (n, tau); tau = +1 gives n = 0, 1, ..., tau = -1 starts
// at n = 1. (0, -1) throws NoGroundNegativeError.
SpectrumPoint quantize(const OscillatorConfig&, int n, int tau);

// Algebraically equivalent second closed form; betaTilde > 0 only.
double quantize_p0_alt(const OscillatorConfig&, int n, int tau);

// Ladder coefficient g_i = 1 + bt wt i of the factorization chain.
double ladder_g(const OscillatorConfig&, int i);
// Shift eps_i = wt (g_{i-1} + g_i) (1 - bt p0^2) between chain members, i >= 1.
double level_shift(const OscillatorConfig&, int i, double p0);
// Ladder eigenvalue e_n(p0) = wt n (2 + bt wt n) (1 - bt p0^2).
double susy_eigenvalue(const OscillatorConfig&, int n, double p0);

// Leading small-deformation behaviour of the tau = +1 level:
//   p0 ~ sqrt(1 + 2 wt n) [1 - (3/2) bt (wt n)^2 / (1 + 2 wt n)].
double p0_small_deformation(const OscillatorConfig&, int n);
// Low-frequency form p0 ~ (1 + bt wt n)^{-1} [1 + wt n (1 + bt wt n / 2)].
double p0_nonrelativistic(const OscillatorConfig&, int n);

// Exact operator algebra of the ladder, with formal symbols: the general
// product difference identity, the shift branch that leaves a momentum-free
// remainder, the sign-flip branch with zero remainder, and the undeformed
// limit where the remainder is the constant 2 g wt.
VerificationReport shape_invariance_report();

struct WavefunctionPair {
    OscillatorConfig cfg;
    int n = 0;
    int tau = +1;
    double p0 = 1;
    double K = 1;      // 1 - bt p0^2
    double lambda = 1; // 1 / (bt wt)
    double logN1 = 0;  // upper-component normalization, N1 > 0
    double logN2 = 0;  // |N2|; sign2 carries its sign, 0 when psi2 vanishes
    int sign2 = 0;

    double f(double p) const { return K + cfg.betaTilde * p * p; }
    // Natural momentum scale of the state; p = pScale() tan(theta) maps the
    // compactified variable to z = sin(theta).
    double pScale() const { return std::sqrt(K / cfg.betaTilde); }

    double psi1(double p) const;
    double psi2(double p) const;
    // Linear-space evaluation carrying d/dp, for first-order residuals.
    Dual psi1(Dual p) const;
    Dual psi2(Dual p) const;
};

// betaTilde must be positive here; (0, -1) throws NoGroundNegativeError.
WavefunctionPair build_wavefunctions(const OscillatorConfig&, int n, int tau);

// Largest relative residual of the coupled first-order system over sample
// momenta, with the sharp energy p0used driving both the eigenvalue factors
// and f. Passing the pair's own p0 must give ~machine zero; a detuned value
// is the negative control.
double dirac_residual_at(const WavefunctionPair&, double p0used, int samples);
double dirac_residual(const WavefunctionPair&, int samples = 64);

// Weighted norm Integral dp f^{-1} (psi1^2 + psi2^2); 1 for a correct build.
double norm_quadrature(const WavefunctionPair&, const QuadratureSpec& = {});

// Overlap of two levels under the symmetrized weight (f_a f_b)^{-1/2}. The
// energy dependence of the weight makes distinct levels non-orthogonal; the
// diagonal reproduces norm_quadrature.
double overlap(const WavefunctionPair& a, const WavefunctionPair& b,
               const QuadratureSpec& = {});

// Ratio [(1 - z^2) d/dz + (1 - 2(lambda+1)) z] C_{n-1}^{(lambda+1)} over
// C_n^{(lambda)} at one z, and its spread across samples (0 when the ladder
// step truly lands on C_n).
double recursion_ratio(int n, double lambda, double z);
double recursion_ratio_spread(int n, double lambda, int samples);

} // namespace mlqm
