#pragma once

// Forward-mode first derivatives. A Dual carries (value, d/dx value); seeding
// x with derivative 1 turns every arithmetic chain into an exact derivative
// evaluation, which the residual checks use instead of finite differences.

#include <cmath>

namespace mlqm {

struct Dual {
    double v = 0;
    double d = 0;

    Dual() = default;
    Dual(double value) : v(value) {}
    Dual(double value, double deriv) : v(value), d(deriv) {}

    static Dual variable(double value) { return {value, 1.0}; }

    Dual operator-() const { return {-v, -d}; }

    friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return {a.v * b.v, a.d * b.v + a.v * b.d};
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
    }

    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }
};

inline Dual sqrt(const Dual& a) {
    double r = std::sqrt(a.v);
    return {r, a.d / (2 * r)};
}
inline Dual exp(const Dual& a) {
    double e = std::exp(a.v);
    return {e, a.d * e};
}
inline Dual log(const Dual& a) { return {std::log(a.v), a.d / a.v}; }
inline Dual pow(const Dual& a, double e) {
    return {std::pow(a.v, e), e * std::pow(a.v, e - 1) * a.d};
}
inline Dual sin(const Dual& a) { return {std::sin(a.v), a.d * std::cos(a.v)}; }
inline Dual cos(const Dual& a) { return {std::cos(a.v), -a.d * std::sin(a.v)}; }
inline Dual tan(const Dual& a) {
    double c = std::cos(a.v);
    return {std::tan(a.v), a.d / (c * c)};
}

} // namespace mlqm
