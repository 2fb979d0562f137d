#pragma once

// Exact scalar arithmetic for the symbolic layer: arbitrary-precision
// rationals and Gaussian rationals (re + im*i with rational parts).
// Every operation is exact; nothing here touches floating point except
// the explicit to_double() conversions used at the numeric boundary.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mlqm {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r);

// Complex number with exact rational real and imaginary parts. Forms a
// field, so it can serve as the coefficient domain of the polynomial ring.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}                       // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}      // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2); exact since Rational is a field.
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        Rational re = (re_ * o.re_ + im_ * o.im_) / n;
        im_ = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(re);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Canonical text form: "0", "3/2", "i", "-i", "2i/3", "1+i", "1-2i".
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

} // namespace mlqm
