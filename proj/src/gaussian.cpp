#include "brauerdet/gaussian.hpp"

namespace brauerdet {

std::string GaussianInt::to_string() const {
    if (is_zero()) return "0";
    if (im_ == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "I";
    } else if (im_ == -1) {
        imag = "-I";
    } else {
        imag = im_.get_str() + "*I";
    }
    if (re_ == 0) return imag;
    if (im_ > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;  // imag already carries the minus sign
}

GaussianInt gauss_mul(const GaussianInt& x, const GaussianInt& y) { return x * y; }

}  // namespace brauerdet
