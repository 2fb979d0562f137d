#pragma once

// Adaptive Gauss-Kronrod (7, 15) quadrature with compensated summation and a
// deterministic left-to-right subdivision order, so results are reproducible
// bit for bit. The interval budget turns non-convergence into an exception
// instead of a silently wrong number.

#include "mlqm/errors.hpp"

#include <functional>

namespace mlqm {

struct QuadratureSpec {
    double relTol = 1e-12;
    double absTol = 1e-15;
    int maxIntervals = 8000;
};

struct QuadratureResult {
    double value = 0;
    double errorEstimate = 0;
    int intervals = 0;
};

// Kahan-Neumaier compensated accumulator.
class NeumaierSum {
public:
    void add(double x);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0;
    double comp_ = 0;
};

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

// Whole real line through x = scale * tan(theta). The scale should match the
// natural width of the integrand so the transformed integrand stays tame.
QuadratureResult integrate_real_line(const std::function<double(double)>& f, double scale,
                                     const QuadratureSpec& spec = {});

} // namespace mlqm
