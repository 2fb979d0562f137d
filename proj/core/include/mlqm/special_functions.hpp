#pragma once

// Gegenbauer (ultraspherical) polynomials and the compactifying change of
// variable used by the bound-state wavefunctions. The log-domain entry points
// stay finite far beyond the range where C_n itself or the Gamma factors in
// its norm overflow a double.

#include <cmath>
#include <cstdint>

namespace mlqm {

// Three-term recurrence; T is double or Dual. Valid for lambda > 0, n >= 0
// (negative n gives 0 by convention, matching the ladder bottom).
template <typename T>
T gegenbauer(int n, double lambda, T z) {
    if (n < 0) return T(0.0);
    T prev(1.0);
    if (n == 0) return prev;
    T cur = z * (2.0 * lambda);
    for (int k = 2; k <= n; ++k) {
        T next = (z * cur * (2.0 * (k + lambda - 1)) - prev * (k + 2.0 * lambda - 2.0)) / double(k);
        prev = cur;
        cur = next;
    }
    return cur;
}

// sign * exp(logAbs); sign 0 encodes an exact or underflown zero.
struct LogValue {
    double logAbs = 0;
    int sign = 0;

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(logAbs); }
};

// Same recurrence with periodic rescaling, for large n or lambda.
LogValue log_gegenbauer(int n, double lambda, double z);

// log of h_n(lambda) = Integral_{-1}^{1} (1-z^2)^{lambda-1/2} [C_n(z)]^2 dz
//                    = pi 2^{1-2 lambda} Gamma(2 lambda + n)
//                      / (n! (n + lambda) Gamma(lambda)^2).
double log_gegenbauer_norm(int n, double lambda);
double gegenbauer_norm(int n, double lambda);

// Compactified momentum variable z = p sqrt(bt / (K + bt p^2)) in (-1, 1),
// with inverse p = sqrt(K / bt) z / sqrt(1 - z^2); K > 0, bt > 0.
double z_from_p(double K, double betaTilde, double p);
double p_from_z(double K, double betaTilde, double z);

} // namespace mlqm
