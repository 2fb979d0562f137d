#include "mlqm/special_functions.hpp"

#include "mlqm/errors.hpp"

namespace mlqm {

namespace {

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

constexpr double kRescaleAt = 1e250;
constexpr double kLn2 = 0.6931471805599453094172321214581766;

} // namespace

LogValue log_gegenbauer(int n, double lambda, double z) {
    if (!(lambda > 0)) throw NonPhysicalConfigError("gegenbauer order lambda must be positive");
    if (n < 0) return {0.0, 0};
    if (n == 0) return {0.0, 1};

    double prev = 1.0;
    double cur = 2.0 * lambda * z;
    long shift = 0; // accumulated power of 2 taken out of (prev, cur)
    for (int k = 2; k <= n; ++k) {
        double next = (2.0 * (k + lambda - 1) * z * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
        prev = cur;
        cur = next;
        double mag = std::max(std::abs(prev), std::abs(cur));
        if (mag > kRescaleAt) {
            prev = std::ldexp(prev, -512);
            cur = std::ldexp(cur, -512);
            shift += 512;
        }
    }
    if (cur == 0.0) return {0.0, 0};
    return {std::log(std::abs(cur)) + shift * kLn2, sign_of(cur)};
}

double log_gegenbauer_norm(int n, double lambda) {
    if (!(lambda > 0)) throw NonPhysicalConfigError("gegenbauer order lambda must be positive");
    if (n < 0) throw NonPhysicalConfigError("gegenbauer degree must be non-negative");
    const double pi = 4.0 * std::atan(1.0);
    return std::log(pi) + (1.0 - 2.0 * lambda) * kLn2 + std::lgamma(2.0 * lambda + n) -
           std::lgamma(n + 1.0) - std::log(n + lambda) - 2.0 * std::lgamma(lambda);
}

double gegenbauer_norm(int n, double lambda) { return std::exp(log_gegenbauer_norm(n, lambda)); }

double z_from_p(double K, double betaTilde, double p) {
    if (!(K > 0) || !(betaTilde > 0))
        throw NonPhysicalConfigError("z_from_p needs K > 0 and betaTilde > 0");
    return p * std::sqrt(betaTilde / (K + betaTilde * p * p));
}

double p_from_z(double K, double betaTilde, double z) {
    if (!(K > 0) || !(betaTilde > 0))
        throw NonPhysicalConfigError("p_from_z needs K > 0 and betaTilde > 0");
    if (!(z > -1 && z < 1)) throw NonPhysicalConfigError("p_from_z needs |z| < 1");
    return std::sqrt(K / betaTilde) * z / std::sqrt(1.0 - z * z);
}

} // namespace mlqm
