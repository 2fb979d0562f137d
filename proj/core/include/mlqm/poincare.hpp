#pragma once

// Deformation-corrected symmetry generators for the covariant family. With
// u = 1 - beta p.p (the context base),
//
//   Lhat_ab = u^{-1} (X_a P_b - X_b P_a),   Phat_a = u^{-1} p_a,
//
// indices lowered with diag(+,-,...,-). Lhat_ab collapses exactly to the
// undeformed -i hbar (p_b d_a - p_a d_b) for every beta, beta', gamma, which
// is what makes the closure checks finite symbolic computations.

#include "mlqm/deformed_algebra.hpp"

namespace mlqm {

// Lower-index generators. a == b gives the zero operator; indices beyond the
// family range throw BadIndicesError; Euclidean families are rejected.
DiffOp build_lorentz(const OperatorFamily& fam, std::size_t a, std::size_t b);
DiffOp build_translation(const OperatorFamily& fam, std::size_t a);

// -i hbar (p_b d_a - p_a d_b), the undeformed generator Lhat_ab must equal.
DiffOp undeformed_lorentz(const OperatorFamily& fam, std::size_t a, std::size_t b);

// Commutation relations of the corrected generators among themselves:
//   [Lhat_ab, Lhat_cd] = -i hbar (g_ac Lhat_bd - g_ad Lhat_bc
//                                 - g_bc Lhat_ad + g_bd Lhat_ac)
//   [Lhat_ab, Phat_c]  =  i hbar (g_bc Phat_a - g_ac Phat_b)
//   [Phat_a,  Phat_b]  =  0
// plus the exact reduction Lhat_ab == undeformed form.
VerificationReport verify_poincare_closure(const OperatorFamily& fam);

// Action on the deformed operators, upper-index generators
// Lhat^ab = g^aa g^bb Lhat_ab:
//   i [Lhat^ab, X^mu] = hbar (g^{mu a} X^b - g^{mu b} X^a)   (same with X -> P)
//   i [Phat_a,  X^mu] = -hbar delta^mu_a - hbar g(s) g_aa p^a p^mu,
//       g(s) = (2 beta - beta' - (2 beta + beta') beta s) / (1 - beta s)^2
//   [Phat_a, P^mu] = 0
VerificationReport verify_generator_action(const OperatorFamily& fam);

// First-order transformation with a nilpotent parameter dw (dw^2 = 0):
//   X'^mu = X^mu + dw (g^{mu a} X^b - g^{mu b} X^a),  same for P'. Verifies
// that p.p is invariant and that every defining relation still closes at
// first order, for each generator pair (a, b).
VerificationReport verify_first_order_invariance(const OperatorFamily& fam);

// Two particles, one spatial dimension, additive corrected translation
// generator Phat^(12)_a = u_1^{-1} p_1a + u_2^{-1} p_2a. The residual of the
// relative-coordinate shift,
//   i [Phat^(12)_a, X_1^mu - X_2^mu]
//     = hbar g_aa ( g(s_2) p_2^a p_2^mu - g(s_1) p_1^a p_1^mu ),
// is matched against that closed form and tested for vanishing. It vanishes
// only when the deformation is switched off, so relative motion is not
// translation invariant for beta, beta' != 0.
struct TwoParticleResult {
    VerificationReport formula; // residual matches the closed form above
    bool residualVanishes = false;
    std::string residualText; // one representative nonzero residual, if any
};

TwoParticleResult two_particle_check(const DeformationParams& params);

} // namespace mlqm
