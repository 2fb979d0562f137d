#include "mlqm/rational.hpp"

#include <sstream>

namespace mlqm {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";

    auto imag_part = [](const Rational& im) -> std::string {
        if (im == 1) return "i";
        if (im == -1) return "-i";
        Rational n = numerator(im);
        Rational d = denominator(im);
        std::string s = to_string(n) + "i";
        if (d != 1) s += "/" + to_string(d);
        return s;
    };

    if (im_ == 0) return to_string(re_);
    if (re_ == 0) return imag_part(im_);
    std::string s = to_string(re_);
    if (im_ > 0) s += "+";
    return s + imag_part(im_);
}

} // namespace mlqm
